"""Independent re-checking of transformation certificates.

Nothing produced by the construction is trusted: standard form, Gram
matrices and minors are recomputed from the original code, and minimality of
J is re-established by brute force over every smaller deletion set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..codecore import LinearCode, MonomialTransform, apply_transform, hull_dimension, standard_form
from ..errors import LCDError, VerificationFailed
from ..matfq import MatrixFq, det, diag_add, principal_delete, rank, row_basis
from ..lcdforge import perturbation
from .formats import TransformRecord


@dataclass(frozen=True)
class VerifyReport:
    kind: str
    checks: tuple[str, ...]


def _expect(cond: bool, field: str, msg: str) -> None:
    if not cond:
        raise VerificationFailed(field, msg)


def _check_header(original: LinearCode, rec: TransformRecord) -> None:
    _expect(rec.q == original.q, "q", f"certificate q={rec.q}, code q={original.q}")
    _expect(rec.n == original.n, "n", f"certificate n={rec.n}, code n={original.n}")
    _expect(rec.form == original.variant, "form", f"certificate form={rec.form}, code form={original.variant}")


def verify_lcdify(original: LinearCode, transformed: LinearCode, rec: TransformRecord) -> VerifyReport:
    _expect(rec.kind == "lcdify", "kind", f"expected an lcdify certificate, got {rec.kind}")
    _check_header(original, rec)
    F, n, k = original.field, original.n, original.k
    _expect(transformed.field == F, "field", "transformed code lives in another field")
    _expect(transformed.n == n and transformed.k == k, "n",
            f"transformed code is [{transformed.n},{transformed.k}], expected [{n},{k}]")
    _expect(transformed.variant == original.variant, "form", "inner product changed")

    # (a) transformed = sigma(C_a), generated exactly by the scaled standard form
    w = standard_form(original)
    _expect(tuple(rec.sigma) == w.sigma, "sigma", f"expected {[s + 1 for s in w.sigma]}")
    _expect(len(rec.a) == n and all(0 <= x < F.q for x in rec.a), "a", "malformed scaling word")
    a_std = tuple(rec.a[s] for s in rec.sigma)
    _expect(transformed.G == w.G_std.scale_cols(a_std), "a",
            "transformed generator is not the scaled standard-form generator")
    try:
        moved = apply_transform(original, MonomialTransform(tuple(rec.a), tuple(rec.sigma)), allow_degenerate=True)
    except LCDError as exc:
        raise VerificationFailed("a", f"transform cannot be applied: {exc}") from None
    _expect(row_basis(moved.G) == row_basis(transformed.G), "a", "sigma(C_a) differs from the transformed code")

    # (b) determinant of the new Gram matrix
    M = LinearCode(F, w.G_std, original.variant).gram()
    d_after = det(transformed.gram())
    _expect(d_after.value == rec.det_gram_after, "det_gram_after",
            f"recomputed {d_after.value}, certificate says {rec.det_gram_after}")
    _expect(bool(d_after), "det_gram_after", "Gram matrix is singular: code is not LCD")
    if rec.det_gram_before is not None:
        _expect(det(M).value == rec.det_gram_before, "det_gram_before",
                f"recomputed {det(M).value}, certificate says {rec.det_gram_before}")

    # (c) J is a minimal deletion set
    J = tuple(rec.J)
    _expect(len(set(J)) == len(J) and all(0 <= j < k for j in J), "J", f"indices must be distinct in 1..{k}")
    for s in range(len(J)):
        for I in combinations(range(k), s):
            if det(principal_delete(M, I)):
                raise VerificationFailed(
                    "J", f"minimality: deleting {[i + 1 for i in I]} already gives a nonzero minor"
                )
    _expect(rec.t == (len(J) - 1 if J else None), "t", f"t={rec.t} but |J|={len(J)}")
    d_MJ = det(principal_delete(M, J))
    _expect(d_MJ.value == rec.det_MJ, "det_MJ", f"recomputed {d_MJ.value}, certificate says {rec.det_MJ}")
    _expect(bool(d_MJ), "det_MJ", "minor after deleting J is zero")

    # (d) scaling word shape and the determinant factorization
    u = perturbation(F, original.variant, a_std, k)
    inside = set(J)
    for j in range(k):
        _expect(bool(u[j]) == (j in inside), "a",
                f"coordinate {j + 1}: scaling must perturb the Gram diagonal exactly on J")
    for j in range(k, n):
        _expect(perturbation(F, original.variant, (a_std[j],), 1)[0] == 0, "a",
                f"coordinate {j + 1}: scaling outside J must preserve the inner product")
    lhs = det(diag_add(M, u))
    rhs = F(rec.det_MJ)
    for j in J:
        rhs = rhs * F(u[j])
    _expect(lhs == rhs, "factorization", f"det(M + diag u) = {lhs.value} but prod(u_J) * det_MJ = {rhs.value}")
    _expect(lhs == d_after, "factorization", "perturbed Gram determinant disagrees with the transformed code")
    return VerifyReport("lcdify", ("header", "transform", "det_gram_after", "minimality", "factorization"))


def verify_extension(original: LinearCode, extended: LinearCode, rec: TransformRecord) -> VerifyReport:
    _expect(rec.kind == "extension", "kind", f"expected an extension certificate, got {rec.kind}")
    _check_header(original, rec)
    F, n, k = original.field, original.n, original.k
    h = hull_dimension(original)
    _expect(rec.h == h, "h", f"recomputed hull dimension {h}, certificate says {rec.h}")
    _expect(extended.n == n + h and extended.k == k, "n",
            f"extended code is [{extended.n},{extended.k}], expected [{n + h},{k}]")
    head = extended.G.take_cols(range(n))
    tail = extended.G.take_cols(range(n, n + h))
    _expect(rank(head) == k and row_basis(head) == row_basis(original.G), "basis",
            "first n coordinates do not generate the original code")
    if h:
        expected_tail = MatrixFq(F, [[1 if i == j else 0 for j in range(h)] for i in range(k)])
        _expect(tail == expected_tail, "appended_block", "appended block is not [I_h ; 0]")
        _expect(rank(head.take_rows(range(h))) == h, "basis", "first h rows are dependent")
        gram = LinearCode(F, head, original.variant).gram()
        _expect(not gram.data[:h, :].any(), "basis", "first h rows are not in the hull")
    d_after = det(extended.gram())
    _expect(d_after.value == rec.det_gram_after, "det_gram_after",
            f"recomputed {d_after.value}, certificate says {rec.det_gram_after}")
    _expect(bool(d_after), "det_gram_after", "extended code is not LCD")
    return VerifyReport("extension", ("header", "basis", "appended_block", "det_gram_after"))


def verify(original: LinearCode, transformed: LinearCode, rec: TransformRecord) -> VerifyReport:
    if rec.kind == "extension":
        return verify_extension(original, transformed, rec)
    return verify_lcdify(original, transformed, rec)
