"""Deterministic text exports and validating imports.

Formats (one record per line, '#' starts a comment):
  hexagon   'P a,l,a',l',a''' and 'L k,b,k',b',k''' coordinate lines with
            little-endian digit vectors ('inf' for the empty tuple),
            then 'I <point-index> <line-index>' incidence pairs
  ovoid     'O a,a',a''' triples plus 'O inf'
  blocks    'C|S <gnarl-index> : <point-indices...>' against the canonical
            ovoid ordering
  unital    'b <sorted point indices...>'
"""
from __future__ import annotations

import io as _io
from typing import Iterable, TextIO

from .field import FieldElement, FieldParams
from .geometry import Block, BlockDataError, gnarl_of, ree_context
from .hexagon import HexElement, hexagon_geometry
from .ovoid import OvoidPoint, ovoid


class ParseError(ValueError):
    """Malformed import file; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


# --------------------------------------------------------------------------
# low-level helpers

def _write(target, text: str) -> None:
    if hasattr(target, "write"):
        target.write(text)
    else:
        with open(target, "w", encoding="ascii") as handle:
            handle.write(text)


def _read_lines(source) -> list[tuple[int, str]]:
    if hasattr(source, "read"):
        raw = source.read()
    else:
        with open(source, "r", encoding="ascii") as handle:
            raw = handle.read()
    out = []
    for lineno, line in enumerate(raw.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if body:
            out.append((lineno, body))
    return out


def _element_str(x: FieldElement) -> str:
    return x.digits()


def _parse_element(token: str, params: FieldParams,
                   lineno: int) -> FieldElement:
    if not token or len(token) > params.degree:
        raise ParseError(lineno, f"bad field element {token!r}")
    try:
        coeffs = [int(ch) for ch in token]
    except ValueError:
        raise ParseError(lineno, f"bad field element {token!r}") from None
    if any(c not in (0, 1, 2) for c in coeffs):
        raise ParseError(lineno, f"digits outside 0..2 in {token!r}")
    return params.element(coeffs)


def _coords_str(coords: tuple[FieldElement, ...]) -> str:
    return ",".join(_element_str(c) for c in coords) or "inf"


def _parse_coords(token: str, params: FieldParams,
                  lineno: int) -> tuple[FieldElement, ...]:
    if token == "inf":
        return ()
    parts = token.split(",")
    if len(parts) > 5:
        raise ParseError(lineno, f"more than 5 coordinates in {token!r}")
    return tuple(_parse_element(p, params, lineno) for p in parts)


def _parse_index(token: str, limit: int, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(lineno, f"bad index {token!r}") from None
    if not 0 <= value < limit:
        raise ParseError(lineno, f"index {value} out of range 0..{limit - 1}")
    return value


# --------------------------------------------------------------------------
# hexagon

def export_hexagon(params: FieldParams, target) -> None:
    hx = hexagon_geometry(params)
    buf = _io.StringIO()
    for p in hx.points:
        buf.write(f"P {_coords_str(p.coords)}\n")
    for L in hx.lines:
        buf.write(f"L {_coords_str(L.coords)}\n")
    for j in range(hx.n):
        for i in hx.adj[hx.n + j]:
            buf.write(f"I {i} {j}\n")
    _write(target, buf.getvalue())


def import_hexagon(params: FieldParams, source):
    """-> (points, lines, incidence pairs), in file order."""
    points: list[HexElement] = []
    lines: list[HexElement] = []
    pairs: list[tuple[int, int]] = []
    for lineno, body in _read_lines(source):
        tag, _, rest = body.partition(" ")
        rest = rest.strip()
        if tag == "P":
            points.append(HexElement("point", _parse_coords(rest, params,
                                                            lineno)))
        elif tag == "L":
            lines.append(HexElement("line", _parse_coords(rest, params,
                                                          lineno)))
        elif tag == "I":
            parts = rest.split()
            if len(parts) != 2:
                raise ParseError(lineno, "I expects two indices")
            pairs.append((_parse_index(parts[0], len(points), lineno),
                          _parse_index(parts[1], len(lines), lineno)))
        else:
            raise ParseError(lineno, f"unknown record {tag!r}")
    return points, lines, pairs


# --------------------------------------------------------------------------
# ovoid

def export_ovoid(params: FieldParams, target) -> None:
    buf = _io.StringIO()
    for p in ovoid(params):
        if p.is_infinity:
            buf.write("O inf\n")
        else:
            buf.write("O " + ",".join(_element_str(c) for c in p.triple)
                      + "\n")
    _write(target, buf.getvalue())


def import_ovoid(params: FieldParams, source) -> list[OvoidPoint]:
    out: list[OvoidPoint] = []
    for lineno, body in _read_lines(source):
        tag, _, rest = body.partition(" ")
        if tag != "O":
            raise ParseError(lineno, f"unknown record {tag!r}")
        rest = rest.strip()
        if rest == "inf":
            out.append(OvoidPoint.infinity())
            continue
        coords = _parse_coords(rest, params, lineno)
        if len(coords) != 3:
            raise ParseError(lineno, "ovoid points have 3 coordinates")
        out.append(OvoidPoint.of(*coords))
    return out


# --------------------------------------------------------------------------
# blocks

_KIND_TAGS = {"circle": "C", "sphere": "S"}
_TAG_KINDS = {"C": "circle", "S": "sphere"}


def export_blocks(params: FieldParams, target,
                  blocks: Iterable[Block] | None = None) -> None:
    ctx = ree_context(params)
    if blocks is None:
        blocks = ctx.circles + ctx.spheres
    buf = _io.StringIO()
    for b in blocks:
        indices = sorted(ctx.point_index[p] for p in b.points)
        buf.write(f"{_KIND_TAGS[b.kind]} {ctx.point_index[b.gnarl]} : "
                  + " ".join(str(i) for i in indices) + "\n")
    _write(target, buf.getvalue())


def import_blocks(params: FieldParams, source) -> list[Block]:
    """Parse and validate blocks; a marked gnarl that the orbit criterion
    does not confirm raises BlockDataError."""
    ctx = ree_context(params)
    out: list[Block] = []
    for lineno, body in _read_lines(source):
        tag, _, rest = body.partition(" ")
        if tag not in _TAG_KINDS:
            raise ParseError(lineno, f"unknown record {tag!r}")
        head, sep, tail = rest.partition(":")
        if not sep:
            raise ParseError(lineno, "missing ':' separator")
        gnarl_idx = _parse_index(head.strip(), len(ctx.points), lineno)
        indices = [_parse_index(tok, len(ctx.points), lineno)
                   for tok in tail.split()]
        if len(set(indices)) != len(indices):
            raise ParseError(lineno, "repeated point index")
        block = Block(_TAG_KINDS[tag], ctx.points[gnarl_idx],
                      frozenset(ctx.points[i] for i in indices))
        recomputed = gnarl_of(block, ctx)
        if recomputed != block.gnarl:
            raise BlockDataError(
                f"line {lineno}: marked gnarl {block.gnarl!r} but the orbit "
                f"criterion gives {recomputed!r}")
        out.append(block)
    return out


# --------------------------------------------------------------------------
# unital

def export_unital(params: FieldParams, target,
                  blocks=None) -> None:
    from .geometry import unital_blocks
    ctx = ree_context(params)
    if blocks is None:
        blocks = unital_blocks(params)
    buf = _io.StringIO()
    for b in blocks:
        indices = sorted(ctx.point_index[p] for p in b)
        buf.write("b " + " ".join(str(i) for i in indices) + "\n")
    _write(target, buf.getvalue())


def import_unital(params: FieldParams,
                  source) -> list[frozenset[OvoidPoint]]:
    ctx = ree_context(params)
    out = []
    for lineno, body in _read_lines(source):
        tag, _, rest = body.partition(" ")
        if tag != "b":
            raise ParseError(lineno, f"unknown record {tag!r}")
        indices = [_parse_index(tok, len(ctx.points), lineno)
                   for tok in rest.split()]
        if len(set(indices)) != len(indices):
            raise ParseError(lineno, "repeated point index")
        out.append(frozenset(ctx.points[i] for i in indices))
    return out
