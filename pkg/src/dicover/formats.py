"""Text formats: ``pcs v1`` instances, path literals, and PL track files.

An instance file::

    pcs v1
    cube v dim 0
    cube e dim 1
    face e - 1 v
    face e + 1 v

Blank lines and ``#`` comments are ignored.  Every ``n``-cube must declare
exactly ``2n`` faces.  :func:`serialize` writes cubes dimension-major and
index-minor, then faces per cube by axis with ``-`` before ``+``.

A track file holds one ``seg <cube> <from> <to>`` line per segment; a
coordinate vector is comma-separated rationals (``1/3,1``) and ``()`` for
the empty vector of a vertex.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .dipaths import EdgePath, PLDipath, Segment
from .errors import DicoverError, ParseError
from .precubical import MINUS, PLUS, PrecubicalSet, sign_symbol, validate

HEADER = "pcs v1"
_IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse(text: str, check: bool = True) -> PrecubicalSet:
    """Parse a ``pcs v1`` document; with ``check`` the face identities must hold too."""
    lines = list(_tokens(text))
    if not lines or lines[0][1] != HEADER.split():
        where = lines[0][0] if lines else 1
        raise ParseError(f"expected header {HEADER!r}", where)
    decls = {}        # name -> (dim, lineno)
    order = []
    faces = {}        # name -> {(sign, axis): (target, lineno)}
    for lineno, toks in lines[1:]:
        head = toks[0]
        if head == "cube":
            if len(toks) != 4 or toks[2] != "dim":
                raise ParseError("expected 'cube <name> dim <n>'", lineno)
            name = toks[1]
            if not _IDENT.match(name):
                raise ParseError(f"cube name {name!r} is not an identifier", lineno)
            if name in decls:
                raise ParseError(f"cube {name!r} declared twice", lineno)
            try:
                dim = int(toks[3])
            except ValueError:
                raise ParseError(f"bad dimension {toks[3]!r}", lineno) from None
            if dim < 0:
                raise ParseError("dimension must be nonnegative", lineno)
            decls[name] = (dim, lineno)
            order.append(name)
        elif head == "face":
            if len(toks) != 5 or toks[2] not in ("-", "+"):
                raise ParseError("expected 'face <name> <-|+> <axis> <target>'", lineno)
            name, sign, axis, target = toks[1], toks[2], toks[3], toks[4]
            try:
                axis = int(axis)
            except ValueError:
                raise ParseError(f"bad axis {axis!r}", lineno) from None
            key = (MINUS if sign == "-" else PLUS, axis)
            slot = faces.setdefault(name, {})
            if key in slot:
                raise ParseError(f"face {sign}{axis} of {name!r} declared twice", lineno)
            slot[key] = (target, lineno)
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)

    for name, slot in faces.items():
        for (sign, axis), (target, lineno) in slot.items():
            if name not in decls:
                raise ParseError(f"face of undeclared cube {name!r}", lineno)
            if target not in decls:
                raise ParseError(f"face target {target!r} is not declared", lineno)
            dim = decls[name][0]
            if not 1 <= axis <= dim:
                raise ParseError(f"axis {axis} out of range for {name!r} of dim {dim}", lineno)
            if decls[target][0] != dim - 1:
                raise ParseError(
                    f"face target {target!r} has dim {decls[target][0]}, expected {dim - 1}",
                    lineno,
                )
    for name in order:
        dim, lineno = decls[name]
        got = len(faces.get(name, {}))
        if got != 2 * dim:
            raise ParseError(f"cube {name!r} of dim {dim} has {got} faces, expected {2 * dim}", lineno)

    top = max((d for d, _ in decls.values()), default=-1)
    rosters = [[n for n in order if decls[n][0] == d] for d in range(top + 1)]
    index = {n: k for r in rosters for k, n in enumerate(r)}
    face_rows = {
        d: [
            tuple(index[faces[n][(s, ax)][0]] for ax in range(1, d + 1) for s in (MINUS, PLUS))
            for n in rosters[d]
        ]
        for d in range(1, top + 1)
    }
    try:
        X = PrecubicalSet([len(r) for r in rosters], face_rows, dict(enumerate(rosters)))
    except DicoverError as exc:
        raise ParseError(str(exc)) from exc
    if not check:
        return X
    report = validate(X)
    if not report.ok:
        v = report.violations[0]
        raise ParseError(f"face identities fail: {v}", decls[v.cube_name][1])
    return X


def serialize(X: PrecubicalSet) -> str:
    out = [HEADER]
    for c in X:
        out.append(f"cube {X.name(c)} dim {c.dim}")
    for c in X:
        for axis in range(1, c.dim + 1):
            for sign in (MINUS, PLUS):
                out.append(
                    f"face {X.name(c)} {sign_symbol(sign)} {axis} {X.name(X.face(c, sign, axis))}"
                )
    return "\n".join(out) + "\n"


def parse_path(X: PrecubicalSet, literal: str) -> EdgePath:
    """``path <vertex> <edge> <edge> ...`` by cube names."""
    toks = literal.split()
    if not toks or toks[0] != "path" or len(toks) < 2:
        raise ParseError("expected 'path <vertex> <edge> ...'")
    try:
        v = X.lookup(toks[1])
        edges = [X.lookup(t) for t in toks[2:]]
    except DicoverError as exc:
        raise ParseError(str(exc)) from exc
    if v.dim != 0:
        raise ParseError(f"{toks[1]!r} is not a vertex")
    for t, e in zip(toks[2:], edges):
        if e.dim != 1:
            raise ParseError(f"{t!r} is not an edge")
    try:
        return EdgePath(X, v.index, tuple(e.index for e in edges))
    except DicoverError as exc:
        raise ParseError(str(exc)) from exc


def _coords(tok: str, lineno: int) -> tuple:
    if tok == "()":
        return ()
    try:
        return tuple(Fraction(part) for part in tok.split(","))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad coordinate vector {tok!r}", lineno) from None


def parse_track(X: PrecubicalSet, text: str) -> PLDipath:
    segments = []
    for lineno, toks in _tokens(text):
        if toks[0] != "seg" or len(toks) != 4:
            raise ParseError("expected 'seg <cube> <from> <to>'", lineno)
        try:
            cube = X.lookup(toks[1])
            segments.append(Segment(cube, _coords(toks[2], lineno), _coords(toks[3], lineno)))
        except ParseError:
            raise
        except DicoverError as exc:
            raise ParseError(str(exc), lineno) from exc
    if not segments:
        raise ParseError("track has no segments")
    try:
        return PLDipath(X, tuple(segments))
    except DicoverError as exc:
        raise ParseError(str(exc)) from exc


def format_coords(coords) -> str:
    return ",".join(str(c) for c in coords) if coords else "()"


def serialize_track(alpha: PLDipath) -> str:
    X = alpha.base
    return "".join(
        f"seg {X.name(s.carrier)} {format_coords(s.start)} {format_coords(s.stop)}\n"
        for s in alpha.segments
    )
