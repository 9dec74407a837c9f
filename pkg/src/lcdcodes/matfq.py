"""Dense exact matrices over a :class:`~lcdcodes.galois.FieldSpec`.

Entries are kept as an int64 numpy array of element codes. Matrices are
treated as immutable: the array is flagged read-only and every operation
returns a new matrix. Indices are 0-based here; files and CLI messages use
1-based indices.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from . import _backend
from .errors import DimensionMismatch, FieldMismatch, IndexOutOfRange, NotSquare
from .galois import FieldElement, FieldSpec


class MatrixFq:
    __slots__ = ("field", "data")

    def __init__(self, field: FieldSpec, data):
        arr = np.array(data, dtype=np.int64, copy=True)
        if arr.ndim != 2:
            if arr.size == 0:
                arr = arr.reshape(0, 0)
            else:
                raise DimensionMismatch(f"expected a 2-D array, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError(f"entries outside [0, {field.q})")
        arr.setflags(write=False)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "data", arr)

    def __setattr__(self, name, value):
        raise AttributeError("MatrixFq is immutable")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Iterable[Sequence], cols: int | None = None) -> MatrixFq:
        rows = [[int(x) for x in r] for r in rows]
        if not rows:
            return cls(field, np.zeros((0, cols or 0), dtype=np.int64))
        return cls(field, rows)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> MatrixFq:
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> MatrixFq:
        return cls(field, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def entry(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.field, int(self.data[i, j]))

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()

    @property
    def T(self) -> MatrixFq:
        return MatrixFq(self.field, self.data.T)

    def conj(self, base_q: int | None = None) -> MatrixFq:
        """Entrywise x -> x**Q where the field is F_{Q^2}."""
        return MatrixFq(self.field, self.field.conj_table(base_q)[self.data])

    def __matmul__(self, other: MatrixFq) -> MatrixFq:
        return matmul(self, other)

    def __eq__(self, other):
        if not isinstance(other, MatrixFq):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and bool(np.array_equal(self.data, other.data))

    def __hash__(self):
        return hash((self.field, self.shape, self.data.tobytes()))

    def __repr__(self):
        return f"MatrixFq(F_{self.field.q}, {self.tolist()})"

    def is_zero(self) -> bool:
        return not self.data.any()

    def is_square(self) -> bool:
        return self.rows == self.cols

    def take_rows(self, idx: Sequence[int]) -> MatrixFq:
        return MatrixFq(self.field, self.data[list(idx), :].reshape(len(idx), self.cols))

    def take_cols(self, idx: Sequence[int]) -> MatrixFq:
        return MatrixFq(self.field, self.data[:, list(idx)].reshape(self.rows, len(idx)))

    def scale_cols(self, a: Sequence[int]) -> MatrixFq:
        if len(a) != self.cols:
            raise DimensionMismatch(f"{len(a)} scalars for {self.cols} columns")
        F = self.field
        out = np.array(self.data)
        for j, s in enumerate(a):
            s = int(s)
            out[:, j] = [F.mul(int(x), s) for x in out[:, j]]
        return MatrixFq(F, out)


def _same_field(*ms: MatrixFq) -> FieldSpec:
    F = ms[0].field
    for m in ms[1:]:
        if m.field != F:
            raise FieldMismatch(f"{F} vs {m.field}")
    return F


def vstack(top: MatrixFq, bottom: MatrixFq) -> MatrixFq:
    F = _same_field(top, bottom)
    if top.cols != bottom.cols and top.rows and bottom.rows:
        raise DimensionMismatch("column counts differ")
    if not top.rows:
        return bottom
    if not bottom.rows:
        return top
    return MatrixFq(F, np.vstack([top.data, bottom.data]))


def hstack(left: MatrixFq, right: MatrixFq) -> MatrixFq:
    F = _same_field(left, right)
    if left.rows != right.rows:
        raise DimensionMismatch("row counts differ")
    return MatrixFq(F, np.hstack([left.data, right.data]))


def matmul(A: MatrixFq, B: MatrixFq) -> MatrixFq:
    F = _same_field(A, B)
    if A.cols != B.rows:
        raise DimensionMismatch(f"{A.shape} @ {B.shape}")
    if A.rows == 0 or B.cols == 0 or A.cols == 0:
        return MatrixFq.zeros(F, A.rows, B.cols)
    return MatrixFq(F, _backend.matmul(A.data, B.data, F))


def rref(M: MatrixFq) -> tuple[MatrixFq, int, list[int]]:
    """Reduced row echelon form, rank and (0-based) pivot columns."""
    if M.rows == 0 or M.cols == 0:
        return M, 0, []
    R, piv = _backend.rref(M.data, M.field)
    return MatrixFq(M.field, R), len(piv), list(piv)


def rank(M: MatrixFq) -> int:
    return rref(M)[1]


def row_basis(M: MatrixFq) -> MatrixFq:
    """Nonzero rows of rref(M): a canonical basis of the row space."""
    R, r, _ = rref(M)
    return MatrixFq(M.field, R.data[:r].reshape(r, M.cols))


def det(M: MatrixFq) -> FieldElement:
    if not M.is_square():
        raise NotSquare(f"determinant of a {M.rows}x{M.cols} matrix")
    if M.rows == 0:
        return M.field.one
    return FieldElement(M.field, int(_backend.det(M.data, M.field)))


def det_by_permutations(M: MatrixFq) -> FieldElement:
    """Leibniz expansion. Exponential; kept as an independent check of :func:`det`."""
    if not M.is_square():
        raise NotSquare(f"determinant of a {M.rows}x{M.cols} matrix")
    F = M.field
    n = M.rows
    total = 0
    rows = M.tolist()
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = 1
        for i, j in enumerate(perm):
            term = F.mul(term, rows[i][j])
        total = F.sub(total, term) if inversions % 2 else F.add(total, term)
    return FieldElement(F, total)


def kernel(M: MatrixFq) -> MatrixFq:
    """Basis (as rows) of the left kernel {x : x M = 0}."""
    F = M.field
    n = M.rows
    if M.cols == 0:
        return MatrixFq.identity(F, n)
    R, r, piv = rref(M.T)
    free = [c for c in range(n) if c not in piv]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for b, f in enumerate(free):
        basis[b, f] = 1
        for i, pc in enumerate(piv):
            basis[b, pc] = F.neg(int(R.data[i, f]))
    return MatrixFq(F, basis)


def gram_euclidean(G: MatrixFq) -> MatrixFq:
    return matmul(G, G.T)


def gram_hermitian(G: MatrixFq, base_q: int | None = None) -> MatrixFq:
    return matmul(G, G.conj(base_q).T)


def principal_delete(M: MatrixFq, I: Iterable[int]) -> MatrixFq:
    """Delete the rows and columns listed in ``I`` (0-based)."""
    if not M.is_square():
        raise NotSquare(f"principal submatrix of a {M.rows}x{M.cols} matrix")
    I = set(I)
    bad = [i for i in I if not 0 <= i < M.rows]
    if bad:
        raise IndexOutOfRange(f"index {bad[0] + 1} outside 1..{M.rows}")
    keep = [i for i in range(M.rows) if i not in I]
    return MatrixFq(M.field, M.data[np.ix_(keep, keep)].reshape(len(keep), len(keep)))


def diag_add(M: MatrixFq, u: Sequence) -> MatrixFq:
    if not M.is_square():
        raise NotSquare(f"diag_add on a {M.rows}x{M.cols} matrix")
    if len(u) != M.rows:
        raise DimensionMismatch(f"{len(u)} diagonal entries for a {M.rows}x{M.rows} matrix")
    F = M.field
    out = np.array(M.data)
    for i, ui in enumerate(u):
        out[i, i] = F.add(int(out[i, i]), int(ui))
    return MatrixFq(F, out)
