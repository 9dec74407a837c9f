"""Exact LCD-code constructions over finite fields."""

from .bounds import entropy, gv_rate, singleton_defect
from .codecore import (
    EUCLIDEAN,
    HERMITIAN,
    LinearCode,
    MonomialTransform,
    TrivialCode,
    apply_transform,
    dual,
    hull_basis,
    hull_dimension,
    is_lcd,
    is_mds,
    min_distance,
    new_code,
    standard_form,
)
from .galois import FieldElement, FieldSpec, conjugate, field_of_order, make_field, norm
from .lcdforge import (
    extend_to_lcd,
    extension_is_deficient,
    find_minimal_deletion,
    hull_complement_subcode,
    hull_decomposition,
    lcdify,
)
from .matfq import MatrixFq, det, kernel, rank, rref

__all__ = [
    "EUCLIDEAN", "HERMITIAN", "FieldElement", "FieldSpec", "LinearCode", "MatrixFq",
    "MonomialTransform", "TrivialCode", "apply_transform", "conjugate", "det", "dual",
    "entropy", "extend_to_lcd", "extension_is_deficient", "field_of_order",
    "find_minimal_deletion", "gv_rate", "hull_basis", "hull_complement_subcode",
    "hull_decomposition", "hull_dimension", "is_lcd", "is_mds", "kernel", "lcdify",
    "make_field", "min_distance", "new_code", "norm", "rank", "rref", "singleton_defect",
    "standard_form",
]
