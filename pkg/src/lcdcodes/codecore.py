"""Linear codes over F_q: duals, hulls, LCD test, monomial maps, distance."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _backend
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    HermitianNeedsSquareOrder,
    NotAQuadraticExtension,
    RankDropped,
    ZeroCode,
    ZeroScalarNotAllowed,
)
from .galois import FieldElement, FieldSpec
from .matfq import (
    MatrixFq,
    det,
    gram_euclidean,
    gram_hermitian,
    kernel,
    matmul,
    rank,
    row_basis,
    rref,
)

EUCLIDEAN = "euclidean"
HERMITIAN = "hermitian"
VARIANTS = (EUCLIDEAN, HERMITIAN)

DEFAULT_DISTANCE_BUDGET = 2_000_000


class LinearCode:
    """Row space of a full-rank k x n generator matrix.

    A full-rank ``G`` is stored exactly as given, so Gram determinants refer
    to that basis. A rank-deficient ``G`` is replaced by the nonzero rows of
    its reduced echelon form.
    """

    def __init__(self, field: FieldSpec, G, variant: str = EUCLIDEAN):
        if variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
        if not isinstance(G, MatrixFq):
            G = MatrixFq(field, G)
        if G.field != field:
            raise DimensionMismatch("generator lives in a different field")
        if G.rows == 0 or G.cols == 0:
            raise ZeroCode("empty generator matrix")
        self.base_q = None
        if variant == HERMITIAN:
            try:
                self.base_q = field.base_order()
            except NotAQuadraticExtension:
                raise HermitianNeedsSquareOrder(f"F_{field.q} has no Hermitian form") from None
        r = rank(G)
        if r == 0:
            raise ZeroCode("generator matrix is zero")
        if r < G.rows:
            G = row_basis(G)
        self.field = field
        self.G = G
        self.variant = variant
        self._lock = threading.Lock()
        self._gram = None
        self._d = None

    @property
    def n(self) -> int:
        return self.G.cols

    @property
    def k(self) -> int:
        return self.G.rows

    @property
    def q(self) -> int:
        return self.field.q

    def gram(self) -> MatrixFq:
        """G G^T, or G conj(G)^T for the Hermitian variant."""
        with self._lock:
            if self._gram is None:
                if self.variant == HERMITIAN:
                    self._gram = gram_hermitian(self.G, self.base_q)
                else:
                    self._gram = gram_euclidean(self.G)
            return self._gram

    def with_generator(self, G: MatrixFq) -> LinearCode:
        return LinearCode(self.field, G, self.variant)

    def same_space(self, other: LinearCode) -> bool:
        return (
            self.field == other.field
            and self.n == other.n
            and self.k == other.k
            and row_basis(self.G) == row_basis(other.G)
        )

    def contains(self, v: Sequence[int]) -> bool:
        stacked = MatrixFq(self.field, np.vstack([self.G.data, np.asarray(v, dtype=np.int64)]))
        return rank(stacked) == self.k

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}] over F_{self.q}, {self.variant})"


@dataclass(frozen=True)
class TrivialCode:
    """The zero code {0} of length n; returned where a dimension-0 result is legitimate."""

    field: FieldSpec
    n: int
    variant: str = EUCLIDEAN
    k: int = 0


def new_code(field: FieldSpec, G, variant: str = EUCLIDEAN) -> LinearCode:
    return LinearCode(field, G, variant)


@dataclass(frozen=True)
class MonomialTransform:
    """c -> sigma(c_a): scale coordinate j by a[j], then position i takes old coordinate sigma[i].

    ``a`` holds element codes; ``sigma`` is 0-based.
    """

    a: tuple[int, ...]
    sigma: tuple[int, ...]

    def __post_init__(self):
        if len(self.a) != len(self.sigma):
            raise DimensionMismatch("scaling word and permutation differ in length")
        if sorted(self.sigma) != list(range(len(self.sigma))):
            raise ValueError(f"sigma is not a permutation: {self.sigma}")

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def all_nonzero(self) -> bool:
        return all(self.a)

    @classmethod
    def identity(cls, n: int) -> MonomialTransform:
        return cls((1,) * n, tuple(range(n)))


@dataclass(frozen=True)
class StandardFormWitness:
    sigma: tuple[int, ...]
    G_std: MatrixFq
    P: MatrixFq

    @property
    def transform(self) -> MonomialTransform:
        return MonomialTransform((1,) * len(self.sigma), self.sigma)


def permute_cols(G: MatrixFq, sigma: Sequence[int]) -> MatrixFq:
    return G.take_cols(sigma)


def standard_form(C: LinearCode) -> StandardFormWitness:
    """Move the rref pivot columns (stably) to the front; G_std = [I_k : P]."""
    R, r, piv = rref(C.G)
    rest = [j for j in range(C.n) if j not in set(piv)]
    sigma = tuple(piv + rest)
    G_std = MatrixFq(C.field, R.data[:r][:, list(sigma)])
    return StandardFormWitness(sigma, G_std, G_std.take_cols(range(r, C.n)))


def dual(C: LinearCode) -> LinearCode | TrivialCode:
    """Euclidean or Hermitian dual, with an rref generator."""
    if C.k == C.n:
        return TrivialCode(C.field, C.n, C.variant)
    H = kernel(C.G.T)
    if C.variant == HERMITIAN:
        H = H.conj(C.base_q)
    return LinearCode(C.field, row_basis(H), C.variant)


def hull_basis(C: LinearCode) -> MatrixFq:
    """Rows x G for x in the left kernel of the Gram matrix.

    x G lies in the dual iff G (x G)^T = M x^T = 0, and M is (conjugate-)
    symmetric so this is the left kernel condition x M = 0.
    """
    X = kernel(C.gram())
    if X.rows == 0:
        return MatrixFq.zeros(C.field, 0, C.n)
    return matmul(X, C.G)


def hull_dimension(C: LinearCode) -> int:
    return C.k - rank(C.gram())


@dataclass(frozen=True)
class LCDVerdict:
    lcd: bool
    det: FieldElement

    def __bool__(self):
        return self.lcd


def is_lcd(C: LinearCode) -> LCDVerdict:
    d = det(C.gram())
    return LCDVerdict(bool(d), d)


def apply_transform(C: LinearCode, T: MonomialTransform, allow_degenerate: bool = False) -> LinearCode:
    if T.n != C.n:
        raise DimensionMismatch(f"transform of length {T.n} on a code of length {C.n}")
    if not T.all_nonzero and not allow_degenerate:
        raise ZeroScalarNotAllowed("zero scalar in a; pass allow_degenerate=True to permit it")
    G = C.G.scale_cols(T.a).take_cols(T.sigma)
    r = rank(G)
    if r < C.k:
        reduced = LinearCode(C.field, G, C.variant) if r else TrivialCode(C.field, C.n, C.variant)
        raise RankDropped(f"dimension fell from {C.k} to {r}", code=reduced)
    return LinearCode(C.field, G, C.variant)


def projective_classes(q: int, k: int) -> int:
    return (q**k - 1) // (q - 1)


def min_distance(C: LinearCode, budget: int = DEFAULT_DISTANCE_BUDGET) -> int:
    """Exact minimum distance by enumerating one message per projective class."""
    if C._d is not None:
        return C._d
    need = projective_classes(C.q, C.k)
    if need > budget:
        raise BudgetExceeded(
            f"{need} projective classes exceed the budget of {budget}", required=need, budget=budget
        )
    d, _ = _backend.min_weight(C.G.data, C.field, 1)
    with C._lock:
        C._d = d
    return d


def is_mds(C: LinearCode, budget: int = DEFAULT_DISTANCE_BUDGET) -> bool:
    return min_distance(C, budget) == C.n - C.k + 1
