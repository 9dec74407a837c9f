import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcdcodes.bounds import entropy, gv_rate, report, singleton_defect
from lcdcodes.errors import InvalidParameters, OutOfDomain


def test_entropy_examples():
    assert entropy(3, 0.0) == 0.0
    assert math.isclose(entropy(2, 0.5), 1.0, abs_tol=1e-12)
    for q in (2, 4, 5, 9):
        assert math.isclose(entropy(q, (q - 1) / q), 1.0, abs_tol=1e-12)


def test_gv_examples():
    assert math.isclose(gv_rate(2, 1e-12), 1.0, abs_tol=1e-9)
    r = gv_rate(2, 0.5 - 1e-4)
    assert 0 < r < 1e-6
    for q in (2, 3, 9):
        with pytest.raises(OutOfDomain):
            gv_rate(q, (q - 1) / q)
        with pytest.raises(OutOfDomain):
            gv_rate(q, 0.0)


def test_singleton_examples():
    assert singleton_defect(2, 1, 2) == 0
    assert singleton_defect(7, 4, 3) == 1
    assert singleton_defect(5, 5, 1) == 0
    with pytest.raises(InvalidParameters):
        singleton_defect(4, 2, 4)
    with pytest.raises(InvalidParameters):
        singleton_defect(3, 4, 1)


def test_report():
    r = report(2, delta=0.11, n=7, k=4, d=3)
    assert r.singleton_defect == 1 and r.mds is False
    assert math.isclose(r.gv_rate + r.entropy, 1.0, abs_tol=1e-12)
    assert report(5).mds is None


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 9, 16])
def test_entropy_increasing(q):
    top = (q - 1) / q
    xs = [top * i / 1000 for i in range(1001)]
    hs = [entropy(q, x) for x in xs]
    assert all(a < b for a, b in zip(hs, hs[1:]))


@settings(max_examples=300)
@given(q=st.integers(2, 64), f=st.floats(1e-9, 1 - 1e-9))
def test_gv_complements_entropy(q, f):
    delta = f * (q - 1) / q
    assert abs(gv_rate(q, delta) + entropy(q, delta) - 1.0) <= 1e-12
