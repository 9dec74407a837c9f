import numpy as np
import pytest

from lcdcodes import _backend, _pure
from lcdcodes.galois import field_of_order

compiled = pytest.importorskip("lcdcodes._kernels")


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9, 16, 25, 49, 256, 2048])
def test_kernels_agree(q):
    F = field_of_order(q)
    rnd = np.random.default_rng(q)
    for _ in range(20):
        r, c = rnd.integers(1, 7, size=2)
        A = rnd.integers(0, q, size=(r, c))
        B = rnd.integers(0, q, size=(c, r))
        R1, p1 = compiled.rref(A, F)
        R2, p2 = _pure.rref(A, F)
        assert np.array_equal(R1, R2) and list(p1) == list(p2)
        assert np.array_equal(compiled.matmul(A, B, F), _pure.matmul(A, B, F))
        S = rnd.integers(0, q, size=(r, r))
        assert compiled.det(S, F) == _pure.det(S, F)
        if q ** min(r, 4) <= 5000:
            G = A[: min(r, 4)]
            if G.any():
                assert compiled.min_weight(G, F)[0] == _pure.min_weight(G, F)[0]


def test_switching():
    assert _backend.compiled_available()
    try:
        _backend.set_backend("python")
        assert _backend.name() == "python"
    finally:
        _backend.set_backend("compiled")
    assert _backend.name() == "compiled"
    with pytest.raises(ValueError):
        _backend.set_backend("gpu")


def test_min_weight_stop_and_visits():
    F = field_of_order(5)
    G = np.array([[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]])
    for impl in (compiled, _pure):
        d, visited = impl.min_weight(G, F, 1)
        assert d == 2 and visited == (5**3 - 1) // 4


def test_fallback_selected_when_extension_missing():
    import subprocess
    import sys

    code = (
        "import sys; sys.modules['lcdcodes._kernels'] = None\n"
        "from lcdcodes import _backend, new_code, make_field, lcdify, min_distance\n"
        "assert _backend.name() == 'python' and not _backend.compiled_available()\n"
        "F = make_field(5); r = lcdify(new_code(F, [[1, 2, 3], [0, 1, 1]]))\n"
        "print(_backend.name(), min_distance(r.code))\n"
    )
    r = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True)
    assert r.returncode == 0, r.stderr
    assert r.stdout.split()[0] == "python"


def test_python_backend_end_to_end():
    from lcdcodes import is_lcd, lcdify, min_distance
    from lcdcodes.shell.rng import random_code

    F = field_of_order(8)
    results = {}
    for which in ("python", "compiled"):
        _backend.set_backend(which)
        try:
            C = random_code(F, 7, 3, 11)
            res = lcdify(C)
            assert is_lcd(res.code)
            results[which] = (res.code.G.tolist(), min_distance(res.code))
        finally:
            _backend.set_backend("compiled")
    assert results["python"] == results["compiled"]


def test_benchmark_smoke(capsys):
    import importlib.util
    from pathlib import Path

    path = Path(__file__).parents[1] / "benchmarks" / "bench_kernels.py"
    spec = importlib.util.spec_from_file_location("bench_kernels", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    mod.main(["--quick", "--repeat", "1"])
    assert "min_weight" in capsys.readouterr().out
