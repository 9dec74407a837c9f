"""q-ary entropy, Gilbert-Varshamov rate and Singleton defect."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidParameters, OutOfDomain


def _xlogx(x: float) -> float:
    # 0 log 0 = 0 by continuity
    return x * math.log(x) if x > 0 else 0.0


def entropy(q: int, x: float) -> float:
    """H_q(x) = x log_q(q-1) - x log_q(x) - (1-x) log_q(1-x) on [0, 1]."""
    if q < 2:
        raise OutOfDomain(f"alphabet size {q} < 2")
    if not 0.0 <= x <= 1.0:
        raise OutOfDomain(f"x={x} outside [0, 1]")
    lnq = math.log(q)
    return (x * math.log(q - 1) - _xlogx(x) - _xlogx(1.0 - x)) / lnq


def gv_rate(q: int, delta: float) -> float:
    """Asymptotic Gilbert-Varshamov rate 1 - H_q(delta), for 0 < delta < (q-1)/q."""
    if not 0.0 < delta < (q - 1) / q:
        raise OutOfDomain(f"delta={delta} outside the open interval (0, {(q - 1) / q})")
    return 1.0 - entropy(q, delta)


def singleton_defect(n: int, k: int, d: int) -> int:
    if not (1 <= k <= n and d >= 1):
        raise InvalidParameters(f"[{n},{k},{d}] is not a valid parameter triple")
    defect = (n + 1 - k) - d
    if defect < 0:
        raise InvalidParameters(f"d={d} exceeds the Singleton bound n+1-k={n + 1 - k}")
    return defect


@dataclass(frozen=True)
class BoundsReport:
    q: int
    delta: float | None = None
    entropy: float | None = None
    gv_rate: float | None = None
    n: int | None = None
    k: int | None = None
    d: int | None = None
    singleton_defect: int | None = None

    @property
    def mds(self) -> bool | None:
        return None if self.singleton_defect is None else self.singleton_defect == 0


def report(q: int, delta: float | None = None, n: int | None = None, k: int | None = None,
           d: int | None = None) -> BoundsReport:
    fields = {}
    if delta is not None:
        fields.update(delta=delta, entropy=entropy(q, delta), gv_rate=gv_rate(q, delta))
    if n is not None:
        fields.update(n=n, k=k, d=d, singleton_defect=singleton_defect(n, k, d))
    return BoundsReport(q, **fields)
