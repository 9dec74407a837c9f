"""LCD constructions: equivalent LCD codes by column scaling, and LCD extensions.

The scaling route works on a standard-form generator ``[I_k : P]`` with Gram
matrix ``M``. Scaling column j <= k by ``a_j`` adds ``u_j = a_j^2 - 1``
(Euclidean) or ``a_j^(Q+1) - 1`` (Hermitian over F_{Q^2}) to ``M[j, j]`` and
leaves the rest of ``M`` alone. If every principal minor obtained by deleting
fewer than ``|J|`` indices vanishes, the determinant of the perturbed matrix
collapses to ``prod(u_j, j in J) * det(M with J deleted)``. Choosing ``J`` of
minimal size with a nonzero minor and ``u_j != 0`` exactly on ``J`` therefore
yields a nonsingular Gram matrix.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

from .codecore import (
    HERMITIAN,
    LinearCode,
    MonomialTransform,
    StandardFormWitness,
    TrivialCode,
    hull_basis,
    standard_form,
)
from .errors import (
    AlreadyLCD,
    DecompositionViolated,
    DimensionMismatch,
    FieldTooSmall,
    IndexOutOfRange,
    NotSquare,
    SearchBudgetExceeded,
)
from .galois import FieldElement, FieldSpec
from .matfq import (
    MatrixFq,
    det,
    hstack,
    kernel,
    matmul,
    principal_delete,
    rank,
    row_basis,
    vstack,
)

log = logging.getLogger(__name__)

EXHAUSTIVE = "exhaustive-search"
RANK_SHORTCUT = "rank-bound-shortcut"
DEFAULT_SEARCH_BUDGET = 10**7


@dataclass(frozen=True)
class MinorCertificate:
    """Minimal deletion set ``J`` (0-based) with ``det(M_J) = det_MJ != 0``.

    Every deletion of fewer than ``len(J)`` indices leaves a singular matrix.
    """

    J: tuple[int, ...]
    det_MJ: FieldElement
    mode: str = EXHAUSTIVE

    @property
    def t(self) -> int | None:
        return len(self.J) - 1 if self.J else None


def find_minimal_deletion(M: MatrixFq, budget: int = DEFAULT_SEARCH_BUDGET) -> MinorCertificate:
    """Lexicographically first smallest J with det(M_J) != 0.

    A principal submatrix of order above rank(M) is singular, so sizes below
    ``k - rank(M)`` cannot qualify and are skipped. Deleting everything gives
    the empty matrix (det 1), so the search always terminates.
    """
    if not M.is_square():
        raise NotSquare(f"{M.rows}x{M.cols} matrix")
    k = M.rows
    d = det(M)
    if d:
        return MinorCertificate((), d, EXHAUSTIVE)
    s0 = k - rank(M)
    mode = RANK_SHORTCUT if s0 > 1 else EXHAUSTIVE
    evaluated = 0
    for s in range(s0, k + 1):
        if evaluated + comb(k, s) > budget:
            raise SearchBudgetExceeded(
                f"minor search at size {s} needs {evaluated + comb(k, s)} determinants",
                required=evaluated + comb(k, s),
                budget=budget,
            )
        for J in combinations(range(k), s):
            evaluated += 1
            dj = det(principal_delete(M, J))
            if dj:
                return MinorCertificate(J, dj, mode)
    raise AssertionError("deleting every index always yields det 1")


def _check_J(n: int, k: int, J: Sequence[int]) -> None:
    if k > n:
        raise DimensionMismatch(f"k={k} exceeds n={n}")
    bad = [j for j in J if not 0 <= j < k]
    if bad:
        raise IndexOutOfRange(f"index {bad[0] + 1} outside 1..{k}")


def _scaling(n: int, J: Sequence[int], value: int) -> tuple[int, ...]:
    J = set(J)
    return tuple(value if j in J else 1 for j in range(n))


def choose_scaling_euclidean(
    field: FieldSpec, n: int, k: int, J: Sequence[int], allow_zero: bool = False
) -> tuple[int, ...]:
    """a_j = first element of F_q^* outside {1, -1} on J, 1 elsewhere."""
    _check_J(n, k, J)
    if not J:
        return (1,) * n
    excluded = {1, field.minus_one}
    value = next((v for v in range(1, field.q) if v not in excluded), None)
    if value is None:
        if not allow_zero:
            raise FieldTooSmall(
                f"F_{field.q}^* has no element outside {{1, -1}}; equivalent LCD codes need q > 3"
            )
        value = 0
    return _scaling(n, J, value)


def choose_scaling_hermitian(
    field: FieldSpec, n: int, k: int, J: Sequence[int], allow_zero: bool = False
) -> tuple[int, ...]:
    """a_j = first nonzero element of norm != 1 on J, 1 elsewhere."""
    _check_J(n, k, J)
    Q = field.base_order()
    if not J:
        return (1,) * n
    value = next((v for v in range(1, field.q) if field.pow(v, Q + 1) != 1), None)
    if value is None:
        if not allow_zero:
            raise FieldTooSmall(
                f"every nonzero element of F_{field.q} has norm 1; Hermitian LCD equivalents need Q > 2"
            )
        value = 0
    return _scaling(n, J, value)


def perturbation(field: FieldSpec, variant: str, a: Sequence[int], k: int) -> tuple[int, ...]:
    """Diagonal shift u_j added to the Gram matrix by scaling the identity columns."""
    if variant == HERMITIAN:
        e = field.base_order() + 1
    else:
        e = 2
    return tuple(field.sub(field.pow(int(a[j]), e), 1) for j in range(k))


@dataclass(frozen=True)
class LCDResult:
    code: LinearCode
    transform: MonomialTransform
    certificate: MinorCertificate
    witness: StandardFormWitness
    a_std: tuple[int, ...]
    gram_before: MatrixFq
    u: tuple[int, ...]
    det_gram_after: FieldElement

    @property
    def J(self) -> tuple[int, ...]:
        return self.certificate.J


def lcdify(C: LinearCode, allow_zero: bool = False, budget: int = DEFAULT_SEARCH_BUDGET) -> LCDResult:
    """An LCD code monomially equivalent to ``C`` (degenerate if ``allow_zero`` had to be used)."""
    F = C.field
    w = standard_form(C)
    std = LinearCode(F, w.G_std, C.variant)
    M = std.gram()
    cert = find_minimal_deletion(M, budget)
    choose = choose_scaling_hermitian if C.variant == HERMITIAN else choose_scaling_euclidean
    a = choose(F, C.n, C.k, cert.J, allow_zero)
    out = LinearCode(F, w.G_std.scale_cols(a), C.variant)
    # position i of the output carries original coordinate sigma[i], scaled by a[i]
    b = [0] * C.n
    for i, s in enumerate(w.sigma):
        b[s] = a[i]
    T = MonomialTransform(tuple(b), w.sigma)
    u = perturbation(F, C.variant, a, C.k)
    d_after = det(out.gram())
    if len(cert.J) > C.k - rank(M):
        log.warning("minimal deletion |J|=%d exceeds hull dimension %d", len(cert.J), C.k - rank(M))
    return LCDResult(out, T, cert, w, a, M, u, d_after)


@dataclass(frozen=True)
class ExtensionMap:
    """Hull-first basis of a code and the appended block realising L.

    Row i of ``appended_block`` is the i-th unit vector of F^h for i < h and
    zero after, so L vanishes exactly on the span of ``complement_rows``.
    """

    h: int
    hull_rows: MatrixFq
    complement_rows: MatrixFq
    appended_block: MatrixFq

    @property
    def basis(self) -> MatrixFq:
        return vstack(self.hull_rows, self.complement_rows)


def hull_decomposition(C: LinearCode) -> ExtensionMap:
    F = C.field
    H = hull_basis(C)
    hull = row_basis(H) if H.rows else H
    h = hull.rows
    G_rows = row_basis(C.G)
    chosen, r, extra = hull, h, []
    for i in range(G_rows.rows):
        if r == C.k:
            break
        row = G_rows.take_rows([i])
        trial = vstack(chosen, row)
        if rank(trial) > r:
            chosen, r = trial, r + 1
            extra.append(row.data[0])
    comp = MatrixFq.from_rows(F, extra, cols=C.n)
    block = MatrixFq.zeros(F, C.k, h)
    if h:
        block = vstack(MatrixFq.identity(F, h), MatrixFq.zeros(F, C.k - h, h))
    return ExtensionMap(h, hull, comp, block)


def hull_complement_subcode(C: LinearCode) -> LinearCode | TrivialCode:
    E = hull_decomposition(C)
    if E.h == 0:
        raise AlreadyLCD("code has trivial hull")
    if E.h == C.k:
        return TrivialCode(C.field, C.n, C.variant)
    return LinearCode(C.field, E.complement_rows, C.variant)


def extend_to_lcd(C: LinearCode) -> tuple[LinearCode, ExtensionMap]:
    """[n + h, k, >= d] LCD code: append the hull coordinates of each basis vector."""
    E = hull_decomposition(C)
    if E.h == 0:
        return C, E
    G_ext = hstack(E.basis, E.appended_block)
    return LinearCode(C.field, G_ext, C.variant), E


@dataclass(frozen=True)
class DeficiencyReport:
    deficient: bool
    rank_L: int
    h: int
    det_gram: FieldElement

    def __bool__(self):
        return self.deficient


def extension_is_deficient(C: LinearCode, L_matrix: MatrixFq) -> DeficiencyReport:
    """Check whether appending the columns ``L_matrix`` can give an LCD code.

    ``L_matrix`` (k x t) lists the values of L on the hull-first basis
    returned by :func:`hull_decomposition`. Rank(L) < h forces a singular Gram
    matrix; that conclusion is re-checked on the extended generator.
    """
    E = hull_decomposition(C)
    B = E.basis
    if L_matrix.rows != C.k:
        raise DimensionMismatch(f"L has {L_matrix.rows} rows, code dimension is {C.k}")
    X = kernel(L_matrix)
    ker_rows = matmul(X, B) if X.rows else MatrixFq.zeros(C.field, 0, C.n)
    if rank(vstack(ker_rows, E.hull_rows)) < C.k:
        raise DecompositionViolated("Ker(L) + Hull(C) is a proper subspace of C")
    rL = rank(L_matrix) if L_matrix.cols else 0
    ext = LinearCode(C.field, hstack(B, L_matrix), C.variant)
    d = det(ext.gram())
    deficient = rL < E.h
    if deficient and d:
        raise ArithmeticError("rank(L) < h but the extended Gram matrix is nonsingular")
    return DeficiencyReport(deficient, rL, E.h, d)
