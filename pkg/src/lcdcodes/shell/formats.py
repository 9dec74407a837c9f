"""Line-oriented text formats for codes and transformation certificates.

Code file::

    field p=5 m=1 modulus=0,1
    form euclidean
    n=2 k=1
    1 2

Elements are written as integers whose base-p digits are the polynomial
coefficients (constant term least significant). Blank lines and lines
starting with ``#`` are ignored. Certificate files are ``key: value`` lines;
indices in both formats are 1-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator

from ..codecore import VARIANTS, LinearCode
from ..errors import LCDError, ParseError
from ..galois import FieldSpec, make_field
from ..lcdforge import ExtensionMap, LCDResult
from ..matfq import MatrixFq, det, rank


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line


def _keyvals(line: str, no: int, keys: tuple[str, ...]) -> dict[str, str]:
    out = {}
    for tok in line.split():
        if "=" not in tok:
            raise ParseError(f"expected key=value, got {tok!r}", no)
        k, v = tok.split("=", 1)
        out[k] = v
    missing = [k for k in keys if k not in out]
    if missing:
        raise ParseError(f"missing {', '.join(missing)}", no)
    return out


def _int(s: str, what: str, no: int) -> int:
    try:
        return int(s)
    except ValueError:
        raise ParseError(f"{what}: {s!r} is not an integer", no) from None


def parse_field_header(line: str, no: int = 1) -> FieldSpec:
    if not line.startswith("field "):
        raise ParseError("expected 'field p=<p> m=<m> modulus=<c0,...,cm>'", no)
    kv = _keyvals(line[len("field "):], no, ("p", "m"))
    p, m = _int(kv["p"], "p", no), _int(kv["m"], "m", no)
    modulus = None
    if "modulus" in kv:
        modulus = [_int(c, "modulus", no) for c in kv["modulus"].split(",")]
    try:
        return make_field(p, m, modulus)
    except (LCDError, ValueError) as exc:
        raise ParseError(str(exc), no) from None


def parse_code(text: str, reduce: bool = False) -> LinearCode:
    lines = list(_content_lines(text))
    if len(lines) < 3:
        raise ParseError("truncated header", lines[-1][0] if lines else 1)
    F = parse_field_header(lines[0][1], lines[0][0])
    no, form_line = lines[1]
    m = re.fullmatch(r"form\s+(\S+)", form_line)
    if not m or m.group(1) not in VARIANTS:
        raise ParseError(f"expected 'form euclidean|hermitian', got {form_line!r}", no)
    variant = m.group(1)
    no, dims = lines[2]
    kv = _keyvals(dims, no, ("n", "k"))
    n, k = _int(kv["n"], "n", no), _int(kv["k"], "k", no)
    rows = lines[3:]
    if len(rows) != k:
        raise ParseError(f"header says k={k} but {len(rows)} rows follow", rows[-1][0] if rows else no)
    if n < 1 or k < 1:
        raise ParseError("n and k must be positive", no)
    data = []
    for rno, line in rows:
        vals = [_int(t, "entry", rno) for t in line.split()]
        if len(vals) != n:
            raise ParseError(f"row has {len(vals)} entries, expected n={n}", rno)
        bad = [v for v in vals if not 0 <= v < F.q]
        if bad:
            raise ParseError(f"entry {bad[0]} outside [0, {F.q})", rno)
        data.append(vals)
    G = MatrixFq(F, data)
    r = rank(G)
    if r < k and not reduce:
        raise ParseError(f"generator has rank {r} < k={k} (use --reduce to drop dependent rows)", rows[0][0])
    try:
        return LinearCode(F, G, variant)
    except LCDError as exc:
        raise ParseError(str(exc), rows[0][0]) from None


def format_code(C: LinearCode) -> str:
    out = [C.field.header(), f"form {C.variant}", f"n={C.n} k={C.k}"]
    out += [" ".join(map(str, row)) for row in C.G.tolist()]
    return "\n".join(out) + "\n"


def _ints(vals) -> str:
    return " ".join(str(int(v)) for v in vals)


@dataclass(frozen=True)
class TransformRecord:
    """Serialized certificate. Indices stored 0-based, written 1-based."""

    kind: str
    q: int
    n: int
    form: str
    sigma: tuple[int, ...] = ()
    a: tuple[int, ...] = ()
    J: tuple[int, ...] = ()
    det_MJ: int | None = None
    det_gram_before: int | None = None
    det_gram_after: int | None = None
    mode: str | None = None
    t: int | None = None
    h: int | None = None


def record_from_lcdify(res: LCDResult) -> TransformRecord:
    C = res.code
    return TransformRecord(
        kind="lcdify",
        q=C.q,
        n=C.n,
        form=C.variant,
        sigma=res.transform.sigma,
        a=res.transform.a,
        J=res.certificate.J,
        t=res.certificate.t,
        det_MJ=res.certificate.det_MJ.value,
        det_gram_before=det(res.gram_before).value,
        det_gram_after=res.det_gram_after.value,
        mode=res.certificate.mode,
    )


def record_from_extension(C: LinearCode, C_L: LinearCode, E: ExtensionMap) -> TransformRecord:
    return TransformRecord(
        kind="extension",
        q=C.q,
        n=C.n,
        form=C.variant,
        h=E.h,
        det_gram_after=det(C_L.gram()).value,
    )


def format_record(rec: TransformRecord) -> str:
    lines = [f"kind: {rec.kind}", f"q: {rec.q}", f"n: {rec.n}", f"form: {rec.form}"]
    if rec.kind == "lcdify":
        lines += [
            f"sigma: {_ints(s + 1 for s in rec.sigma)}",
            f"a: {_ints(rec.a)}",
            f"J: {_ints(j + 1 for j in rec.J)}".rstrip(),
            f"t: {'' if rec.t is None else rec.t}".rstrip(),
            f"det_MJ: {rec.det_MJ}",
            f"det_gram_before: {rec.det_gram_before}",
            f"det_gram_after: {rec.det_gram_after}",
            f"mode: {rec.mode}",
        ]
    else:
        lines += [f"h: {rec.h}", f"det_gram_after: {rec.det_gram_after}"]
    return "\n".join(lines) + "\n"


_REQUIRED = {
    "lcdify": ("q", "n", "form", "sigma", "a", "J", "t", "det_MJ", "det_gram_after"),
    "extension": ("q", "n", "form", "h", "det_gram_after"),
}


def parse_record(text: str) -> TransformRecord:
    kv: dict[str, tuple[int, str]] = {}
    for no, line in _content_lines(text):
        if ":" not in line:
            raise ParseError(f"expected 'key: value', got {line!r}", no)
        k, v = line.split(":", 1)
        kv[k.strip()] = (no, v.strip())
    kind = kv.get("kind", (1, "lcdify"))[1]
    if kind not in _REQUIRED:
        raise ParseError(f"unknown certificate kind {kind!r}", kv["kind"][0])
    missing = [k for k in _REQUIRED[kind] if k not in kv]
    if missing:
        raise ParseError(f"certificate lacks {', '.join(missing)}")

    def num(key):
        no, v = kv[key]
        return _int(v, key, no)

    def seq(key, shift=0):
        no, v = kv[key]
        return tuple(_int(t, key, no) - shift for t in v.split())

    form = kv["form"][1]
    if form not in VARIANTS:
        raise ParseError(f"unknown form {form!r}", kv["form"][0])
    if kind == "extension":
        return TransformRecord("extension", num("q"), num("n"), form, h=num("h"),
                               det_gram_after=num("det_gram_after"))
    J = seq("J", 1)
    t_no, t_raw = kv["t"]
    t = None if t_raw in ("", "-", "none") else _int(t_raw, "t", t_no)
    return TransformRecord(
        kind="lcdify",
        q=num("q"),
        n=num("n"),
        form=form,
        sigma=seq("sigma", 1),
        a=seq("a"),
        J=J,
        t=t,
        det_MJ=num("det_MJ"),
        det_gram_before=num("det_gram_before") if "det_gram_before" in kv else None,
        det_gram_after=num("det_gram_after"),
        mode=kv["mode"][1] if "mode" in kv else None,
    )
