"""Text formats for generator matrices and projective systems.

Matrix file::

    q k n
    <k lines of n space-separated element encodings>

System file: a JSON object with keys ``q``, ``k``, ``field_modulus`` and
``points``; each point is ``{"coords": [...], "mult": "<decimal>"}``.
Multiplicities are strings because they outgrow 64-bit integers quickly.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import TextIO, Union

import numpy as np

from .code import LinearCode
from .errors import EncodingOutOfRange, MWSError, NonCanonicalPoint, ParseError
from .gf import make_field
from .pg import ProjectiveSystem, is_canonical

PathLike = Union[str, Path]


def format_matrix(C: LinearCode) -> str:
    lines = [f"{C.q} {C.k} {C.n}"]
    lines += [" ".join(map(str, row)) for row in C.G.tolist()]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> LinearCode:
    lines = [(i, ln) for i, ln in enumerate(text.splitlines(), start=1) if ln.strip()]
    if not lines:
        raise ParseError("empty matrix file", line=1)
    hdr_no, hdr = lines[0]
    head = hdr.split()
    if len(head) != 3:
        raise ParseError("header must be 'q k n'", line=hdr_no)
    try:
        q, k, n = (int(x) for x in head)
    except ValueError:
        raise ParseError("non-integer header field", line=hdr_no) from None
    try:
        F = make_field(q)
    except MWSError as exc:
        raise ParseError(str(exc), line=hdr_no, column=1) from None
    rows = lines[1:]
    if len(rows) != k:
        raise ParseError(f"expected {k} rows, found {len(rows)}",
                         line=rows[-1][0] if rows else hdr_no)
    G = []
    for line_no, ln in rows:
        toks = ln.split()
        if len(toks) != n:
            raise ParseError(f"expected {n} entries, found {len(toks)}", line=line_no)
        row = []
        for col, tok in enumerate(toks, start=1):
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(f"bad integer {tok!r}", line=line_no, column=col) from None
            if not 0 <= v < q:
                raise EncodingOutOfRange(f"{v} not in [0,{q})", line=line_no, column=col)
            row.append(v)
        G.append(row)
    try:
        return LinearCode(F, np.array(G, dtype=np.int64), allow_degenerate=True)
    except (ValueError, MWSError) as exc:
        raise ParseError(str(exc)) from None


def write_matrix(C: LinearCode, dest: PathLike | TextIO) -> None:
    _write(format_matrix(C), dest)


def read_matrix(src: PathLike | TextIO) -> LinearCode:
    return parse_matrix(_read(src))


def format_system(sys: ProjectiveSystem) -> str:
    doc = {
        "q": sys.q,
        "k": sys.k,
        "field_modulus": list(sys.field.modulus),
        "points": [{"coords": list(pt), "mult": str(m)} for pt, m in sys.mults.items()],
    }
    return json.dumps(doc, indent=1) + "\n"


def parse_system(text: str) -> ProjectiveSystem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("system file must hold a JSON object")
    for key in ("q", "k", "field_modulus", "points"):
        if key not in doc:
            raise ParseError(f"missing key {key!r}")
    q, k = doc["q"], doc["k"]
    if not isinstance(q, int) or not isinstance(k, int) or k < 1:
        raise ParseError("q and k must be positive integers")
    try:
        F = make_field(q)
    except MWSError as exc:
        raise ParseError(str(exc)) from None
    if list(doc["field_modulus"]) != list(F.modulus):
        raise ParseError(f"field_modulus {doc['field_modulus']} does not match "
                         f"the canonical GF({q}) modulus {list(F.modulus)}")
    points = doc["points"]
    if not isinstance(points, list) or not points:
        raise ParseError("points must be a non-empty list")
    mults: dict[tuple[int, ...], int] = {}
    for idx, entry in enumerate(points):
        where = f"points[{idx}]"
        try:
            coords = tuple(entry["coords"])
            mult_s = entry["mult"]
        except (KeyError, TypeError):
            raise ParseError(f"{where} needs 'coords' and 'mult'") from None
        if len(coords) != k or not all(isinstance(c, int) for c in coords):
            raise ParseError(f"{where}: coords must be {k} integers")
        if any(not 0 <= c < q for c in coords):
            raise EncodingOutOfRange(f"{where}: coordinate outside [0,{q})")
        if not is_canonical(coords):
            raise NonCanonicalPoint(f"{where}: first nonzero coordinate must be 1")
        if not isinstance(mult_s, str) or not (mult_s.isascii() and mult_s.isdigit()):
            raise ParseError(f"{where}: mult must be a decimal string")
        if coords in mults:
            raise ParseError(f"{where}: duplicate point {list(coords)}")
        mults[coords] = int(mult_s)
    try:
        return ProjectiveSystem(q, k, mults)
    except (ValueError, MWSError) as exc:
        raise ParseError(str(exc)) from None


def write_system(sys: ProjectiveSystem, dest: PathLike | TextIO) -> None:
    _write(format_system(sys), dest)


def read_system(src: PathLike | TextIO) -> ProjectiveSystem:
    return parse_system(_read(src))


def read_any(src: PathLike | TextIO) -> LinearCode | ProjectiveSystem:
    """Read either format, telling them apart by the first non-blank character."""
    text = _read(src)
    return parse_system(text) if text.lstrip().startswith("{") else parse_matrix(text)


def _read(src) -> str:
    if hasattr(src, "read"):
        return src.read()
    return Path(src).read_text()


def _write(text: str, dest) -> None:
    if hasattr(dest, "write"):
        dest.write(text)
    else:
        Path(dest).write_text(text)
