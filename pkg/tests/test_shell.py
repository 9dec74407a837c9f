import random
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcdcodes.codecore import EUCLIDEAN, HERMITIAN
from lcdcodes.errors import ParseError, VerificationFailed
from lcdcodes.galois import field_of_order
from lcdcodes.lcdforge import extend_to_lcd, lcdify
from lcdcodes.shell.cli import main
from lcdcodes.shell.formats import (
    format_code,
    format_record,
    parse_code,
    parse_record,
    record_from_extension,
    record_from_lcdify,
)
from lcdcodes.shell.rng import SplitMix64, random_code
from lcdcodes.shell.verify import verify

F5_CODE = "field p=5 m=1 modulus=0,1\nform euclidean\nn=2 k=1\n1 2\n"


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_splitmix_reference_values():
    # first outputs for seed 1234567 from the reference C implementation
    g = SplitMix64(1234567)
    assert [g.next_u64() for _ in range(3)] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
    ]


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError, match="line 2"):
        parse_code("field p=5 m=1\nform sideways\nn=1 k=1\n1\n")
    with pytest.raises(ParseError, match="line 4"):
        parse_code("field p=5 m=1\nform euclidean\nn=2 k=1\n1 9\n")
    with pytest.raises(ParseError, match="rank"):
        parse_code("field p=5 m=1\nform euclidean\nn=2 k=2\n1 2\n2 4\n")
    C = parse_code("field p=5 m=1\nform euclidean\nn=2 k=2\n1 2\n2 4\n", reduce=True)
    assert C.k == 1


@settings(max_examples=60, deadline=None)
@given(q=st.sampled_from([2, 4, 5, 9, 16, 25]), seed=st.integers(0, 2**64 - 1), data=st.data())
def test_code_round_trip(q, seed, data):
    F = field_of_order(q)
    n = data.draw(st.integers(1, 7))
    k = data.draw(st.integers(1, n))
    variant = data.draw(st.sampled_from([EUCLIDEAN, HERMITIAN] if F.m % 2 == 0 else [EUCLIDEAN]))
    C = random_code(F, n, k, seed, variant)
    text = format_code(C)
    C2 = parse_code(text)
    assert C2.G == C.G and C2.variant == C.variant and C2.field == C.field
    assert format_code(C2) == text


def test_record_round_trip():
    rnd = random.Random(1)
    for _ in range(30):
        F = field_of_order(rnd.choice([5, 7, 9]))
        C = random_code(F, rnd.randint(2, 7), 2, rnd.getrandbits(63))
        rec = record_from_lcdify(lcdify(C))
        assert parse_record(format_record(rec)) == rec
        C_L, E = extend_to_lcd(C)
        rec = record_from_extension(C, C_L, E)
        assert parse_record(format_record(rec)) == rec


def test_verify_rejects_tampering():
    C = parse_code(F5_CODE)
    res = lcdify(C)
    rec = record_from_lcdify(res)
    assert verify(C, res.code, rec).kind == "lcdify"
    import dataclasses

    with pytest.raises(VerificationFailed) as ei:
        verify(C, res.code, dataclasses.replace(rec, det_gram_after=4))
    assert ei.value.field == "det_gram_after"
    with pytest.raises(VerificationFailed) as ei:
        verify(C, res.code, dataclasses.replace(rec, sigma=(1, 0)))
    assert ei.value.field == "sigma"


def test_verify_grown_J_fails_minimality():
    F = field_of_order(7)
    rnd = random.Random(5)
    tried = 0
    for _ in range(200):
        C = random_code(F, 6, 3, rnd.getrandbits(63))
        res = lcdify(C)
        if len(res.J) >= C.k:
            continue
        rec = record_from_lcdify(res)
        extra = next(j for j in range(C.k) if j not in res.J)
        import dataclasses

        grown = dataclasses.replace(rec, J=tuple(sorted(res.J + (extra,))), t=len(res.J))
        with pytest.raises(VerificationFailed) as ei:
            verify(C, res.code, grown)
        assert ei.value.field == "J"
        tried += 1
        if tried >= 5:
            break
    assert tried


def test_cli_analyze(tmp_path, capsys):
    f = write(tmp_path, "c.txt", F5_CODE)
    assert main(["analyze", f, "--mindist"]) == 0
    out = capsys.readouterr().out
    assert "h=1, LCD=no, det=0" in out and "MDS=yes" in out
    g = write(tmp_path, "i.txt", "field p=5 m=1\nform euclidean\nn=2 k=2\n1 0\n0 1\n")
    assert main(["analyze", g]) == 0
    assert "h=0, LCD=yes" in capsys.readouterr().out
    bad = write(tmp_path, "bad.txt", "field p=5\nform euclidean\n")
    assert main(["analyze", bad]) == 2


def test_cli_lcdify_and_verify(tmp_path, capsys):
    f = write(tmp_path, "c.txt", F5_CODE)
    out, cert = str(tmp_path / "o.txt"), str(tmp_path / "t.txt")
    assert main(["lcdify", f, "-o", out, "--cert", cert]) == 0
    assert parse_code(open(out).read()).G.tolist() == [[2, 2]]
    text = open(cert).read()
    assert "J: 1\n" in text
    assert main(["verify", f, out, cert]) == 0
    bad = write(tmp_path, "bad.txt", text.replace("det_gram_after: 3", "det_gram_after: 1"))
    capsys.readouterr()
    assert main(["verify", f, out, bad]) == 5
    assert "det_gram_after" in capsys.readouterr().err


def test_cli_lcdify_already_lcd(tmp_path):
    f = write(tmp_path, "i.txt", "field p=5 m=1\nform euclidean\nn=3 k=2\n0 1 0\n1 0 0\n")
    out, cert = str(tmp_path / "o.txt"), str(tmp_path / "t.txt")
    assert main(["lcdify", f, "-o", out, "--cert", cert]) == 0
    assert parse_code(open(out).read()).G.tolist() == [[1, 0, 0], [0, 1, 0]]
    assert parse_record(open(cert).read()).J == ()


def test_cli_field_too_small(tmp_path, capsys):
    f = write(tmp_path, "c.txt", "field p=3 m=1\nform euclidean\nn=3 k=1\n1 1 1\n")
    assert main(["lcdify", f]) == 3
    assert "q > 3" in capsys.readouterr().err
    assert main(["lcdify", f, "--allow-zero"]) == 0


def test_cli_extend(tmp_path):
    f = write(tmp_path, "c.txt", "field p=2 m=1\nform euclidean\nn=2 k=1\n1 1\n")
    out, cert = str(tmp_path / "o.txt"), str(tmp_path / "e.txt")
    assert main(["extend", f, "-o", out, "--cert", cert]) == 0
    assert parse_code(open(out).read()).G.tolist() == [[1, 1, 1]]
    assert main(["verify", f, out, cert]) == 0


def test_cli_random_deterministic(tmp_path):
    a, b = str(tmp_path / "a"), str(tmp_path / "b")
    for p in (a, b):
        assert main(["random", "--q", "5", "--n", "6", "--k", "3", "--seed", "7", "-o", p]) == 0
    assert open(a, "rb").read() == open(b, "rb").read()
    assert main(["random", "--q", "6", "--n", "6", "--k", "3", "--seed", "7"]) == 2


def test_cli_mindist_and_budget(tmp_path, capsys):
    f = write(tmp_path, "c.txt", F5_CODE)
    assert main(["mindist", f]) == 0
    assert "d=2" in capsys.readouterr().out
    g = str(tmp_path / "big")
    main(["random", "--q", "9", "--n", "10", "--k", "6", "--seed", "1", "-o", g])
    assert main(["mindist", g, "--budget", "10"]) == 4


def test_cli_bounds(capsys):
    assert main(["bounds", "--q", "2", "--delta", "0.5"]) == 2
    assert "OutOfDomain" in capsys.readouterr().err
    assert main(["bounds", "--q", "2", "--n", "7", "--k", "4", "--d", "3"]) == 0
    assert "singleton_defect=1" in capsys.readouterr().out


def test_console_entry_point(tmp_path):
    f = write(tmp_path, "c.txt", F5_CODE)
    r = subprocess.run([sys.executable, "-m", "lcdcodes", "analyze", f], capture_output=True, text=True)
    assert r.returncode == 0 and "LCD=no" in r.stdout
