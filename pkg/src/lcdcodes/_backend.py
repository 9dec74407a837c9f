"""Kernel dispatch: compiled extension when importable, pure Python otherwise."""

from . import _pure

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

_active = _compiled if _compiled is not None else _pure


def compiled_available() -> bool:
    return _compiled is not None


def name() -> str:
    return "compiled" if _active is _compiled else "python"


def set_backend(which: str) -> None:
    """Switch kernels globally; ``which`` is ``"compiled"`` or ``"python"``."""
    global _active
    if which == "python":
        _active = _pure
    elif which == "compiled":
        if _compiled is None:
            raise ImportError("lcdcodes._kernels is not built")
        _active = _compiled
    else:
        raise ValueError(f"unknown backend {which!r}")


def rref(A, F):
    return _active.rref(A, F)


def det(A, F):
    return _active.det(A, F)


def matmul(A, B, F):
    return _active.matmul(A, B, F)


def min_weight(G, F, stop_at=1):
    return _active.min_weight(G, F, stop_at)
