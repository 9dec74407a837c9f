"""Finite fields F_{p^m} in polynomial basis.

An element is stored as a single integer in ``[0, q)`` whose base-``p``
digits are its polynomial coefficients, constant term least significant.
For prime fields this is the usual residue. Multiplication and addition go
through exp/log/Zech-logarithm tables built once per field, which keeps
every operation a couple of list lookups and lets the compiled kernels share
the same representation.
"""

from __future__ import annotations

import functools
from typing import Iterator, Sequence

import numpy as np

from ._conway import CONWAY
from .errors import (
    DivisionByZero,
    FieldMismatch,
    NoCanonicalModulus,
    NotAQuadraticExtension,
    NotPrime,
    ReducibleModulus,
)

MAX_ORDER = 2**16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``q = p**m``; raise NotPrime otherwise."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise NotPrime(f"{q} is not a prime power")
    return p, m


# -- polynomials over F_p as coefficient lists, constant term first ----------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim(list(a))
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) - 1 >= db:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _trim(a)
    return a


def _monic_polys(p: int, d: int) -> Iterator[list[int]]:
    for v in range(p**d):
        coeffs = []
        for _ in range(d):
            v, r = divmod(v, p)
            coeffs.append(r)
        yield coeffs + [1]


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= m/2."""
    m = len(modulus) - 1
    if m <= 0:
        return False
    if m == 1:
        return True
    if modulus[0] % p == 0:
        return False
    for d in range(1, m // 2 + 1):
        for f in _monic_polys(p, d):
            if not _polymod(modulus, f, p):
                return False
    return True


class FieldSpec:
    """The field F_{p^m} = F_p[x]/(modulus).

    Integer-level arithmetic (``add``, ``mul``, ...) works on encoded
    elements; :meth:`__call__` wraps an integer into a :class:`FieldElement`.
    """

    __slots__ = (
        "p", "m", "modulus", "q", "exp", "log", "zech", "_half",
        "exp_np", "log_np", "zech_np", "_conj", "_add_np",
    )

    def __init__(self, p: int, m: int, modulus: Sequence[int]):
        self.p = p
        self.m = m
        self.modulus = tuple(int(c) for c in modulus)
        self.q = p**m
        self._half = (self.q - 1) // 2 if p != 2 else 0
        self._conj = {}
        self._add_np = None
        self._build_tables()

    # -- construction ---------------------------------------------------

    def _digits(self, v: int) -> list[int]:
        out = []
        for _ in range(self.m):
            v, r = divmod(v, self.p)
            out.append(r)
        return out

    def _undigits(self, d: Sequence[int]) -> int:
        v = 0
        for c in reversed(d):
            v = v * self.p + c
        return v

    def _times_x(self, d: list[int]) -> list[int]:
        p, mod = self.p, self.modulus
        top = d[-1]
        out = [0] + d[:-1]
        if top:
            for i in range(self.m):
                out[i] = (out[i] - top * mod[i]) % p
        return out

    def _polymul(self, a: list[int], b: list[int]) -> list[int]:
        acc = [0] * self.m
        shifted = list(a)
        for bi in b:
            if bi:
                acc = [(x + bi * y) % self.p for x, y in zip(acc, shifted)]
            shifted = self._times_x(shifted)
        return acc

    def _slow_pow(self, v: int, e: int) -> int:
        result = self._digits(1)
        base = self._digits(v)
        while e:
            if e & 1:
                result = self._polymul(result, base)
            base = self._polymul(base, base)
            e >>= 1
        return self._undigits(result)

    def _primitive_element(self) -> int:
        n = self.q - 1
        if n == 1:
            return 1
        factors = prime_factors(n)
        # x first: Conway moduli are primitive, so this usually succeeds at once.
        candidates = [self.p] if self.m > 1 else []
        candidates += [g for g in range(2, self.q) if g != self.p]
        for g in candidates:
            if all(self._slow_pow(g, n // r) != 1 for r in factors):
                return g
        raise AssertionError("multiplicative group is cyclic")

    def _build_tables(self) -> None:
        q, p, n = self.q, self.p, self.q - 1
        g = self._primitive_element()
        exp = [0] * (2 * n)
        log = [-1] * q
        if self.m == 1:
            v = 1
            for i in range(n):
                exp[i] = v
                log[v] = i
                v = v * g % p
        else:
            d = self._digits(1)
            gd = self._digits(g)
            step = self._times_x if g == p else (lambda a: self._polymul(a, gd))
            for i in range(n):
                v = self._undigits(d)
                exp[i] = v
                log[v] = i
                d = step(d)
        exp[n:] = exp[:n]
        zech = [-1] * n
        for i in range(n):
            v = exp[i]
            w = v - v % p + (v % p + 1) % p
            zech[i] = log[w] if w else -1
        self.exp, self.log, self.zech = exp, log, zech
        self.exp_np = np.asarray(exp, dtype=np.int64)
        self.log_np = np.asarray(log, dtype=np.int64)
        self.zech_np = np.asarray(zech, dtype=np.int64)

    # -- integer-level arithmetic ---------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        la = self.log[a]
        z = self.zech[(self.log[b] - la) % (self.q - 1)]
        return 0 if z < 0 else self.exp[la + z]

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        if self.p == 2 or a == 0:
            return a
        return self.exp[self.log[a] + self._half]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return a * b % self.p
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"inverse of 0 in F_{self.q}")
        return self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("0 to a negative power")
            return 1 if e == 0 else 0
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    @property
    def minus_one(self) -> int:
        return self.neg(1)

    def add_table(self) -> np.ndarray:
        """Full q*q addition table (flattened), built on demand."""
        if self._add_np is None:
            q = self.q
            t = np.empty(q * q, dtype=np.int64)
            for a in range(q):
                t[a * q:(a + 1) * q] = [self.add(a, b) for b in range(q)]
            self._add_np = t
        return self._add_np

    def coeffs(self, a: int) -> tuple[int, ...]:
        return tuple(self._digits(a))

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        coeffs = list(coeffs) + [0] * (self.m - len(coeffs))
        if len(coeffs) > self.m or any(not 0 <= c < self.p for c in coeffs):
            raise ValueError(f"bad coefficient vector {coeffs} for F_{self.q}")
        return self._undigits(coeffs)

    # -- conjugation over a quadratic subfield --------------------------

    def base_order(self, base_q: int | None = None) -> int:
        """Order of the subfield F_Q with self = F_{Q^2}; validates ``base_q`` if given."""
        if self.m % 2:
            raise NotAQuadraticExtension(f"F_{self.q} is not a quadratic extension")
        Q = self.p ** (self.m // 2)
        if base_q is not None and base_q != Q:
            raise NotAQuadraticExtension(f"F_{self.q} is not F_{{{base_q}^2}}")
        return Q

    def conj_table(self, base_q: int | None = None) -> np.ndarray:
        Q = self.base_order(base_q)
        if Q not in self._conj:
            self._conj[Q] = np.asarray([self.pow(a, Q) for a in range(self.q)], dtype=np.int64)
        return self._conj[Q]

    # -- element wrapper ------------------------------------------------

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"{value.field} vs {self}")
            return value
        v = int(value)
        if not 0 <= v < self.q:
            raise ValueError(f"{v} is not an element encoding of F_{self.q}")
        return FieldElement(self, v)

    def elements(self) -> Iterator[FieldElement]:
        return (FieldElement(self, v) for v in range(self.q))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def _key(self):
        return (self.p, self.m, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.m == 1:
            return f"FieldSpec(F_{self.p})"
        return f"FieldSpec(F_{self.q}, modulus={list(self.modulus)})"

    def header(self) -> str:
        return f"field p={self.p} m={self.m} modulus={','.join(map(str, self.modulus))}"


class FieldElement:
    """Immutable element of a :class:`FieldSpec`."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.div(self.value, b))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    __index__ = __int__

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"F{self.field.q}({self.value})"

    def poly_str(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms) or "0"


@functools.lru_cache(maxsize=None)
def _make_field(p: int, m: int, modulus: tuple[int, ...] | None) -> FieldSpec:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    if p**m > MAX_ORDER:
        raise ValueError(f"field order {p}^{m} exceeds {MAX_ORDER}")
    if m == 1:
        return FieldSpec(p, 1, (0, 1))
    if modulus is None:
        try:
            modulus = CONWAY[(p, m)]
        except KeyError:
            raise NoCanonicalModulus(f"no built-in modulus for F_{p}^{m}") from None
    modulus = tuple(c % p for c in modulus)
    if len(modulus) != m + 1 or modulus[-1] != 1:
        raise ReducibleModulus(f"modulus {list(modulus)} is not monic of degree {m}")
    if not is_irreducible(modulus, p):
        raise ReducibleModulus(f"modulus {list(modulus)} is reducible over F_{p}")
    return FieldSpec(p, m, modulus)


def make_field(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Build (or fetch from cache) F_{p^m}.

    ``modulus`` is a coefficient list, constant term first. When omitted for
    ``m > 1`` the Conway polynomial is used. For ``m == 1`` it is ignored.
    """
    if m == 1:
        modulus = None
    return _make_field(int(p), int(m), None if modulus is None else tuple(int(c) for c in modulus))


def field_of_order(q: int) -> FieldSpec:
    p, m = prime_power(q)
    return make_field(p, m)


def _check(a: FieldElement, b: FieldElement) -> None:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check(a, b)
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check(a, b)
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def conjugate(a: FieldElement, base_q: int) -> FieldElement:
    """a -> a**base_q, the nontrivial automorphism of F_{Q^2} over F_Q."""
    a.field.base_order(base_q)
    return a**base_q


def norm(a: FieldElement, base_q: int) -> FieldElement:
    """a -> a**(base_q + 1) = a * conjugate(a), landing in F_Q."""
    a.field.base_order(base_q)
    return a ** (base_q + 1)
