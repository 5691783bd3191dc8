import io

import pytest

from reekit.field import field_params
from reekit.geometry import (Block, BlockDataError, are_parallel,
                             are_parallel_definitional, circle, gnarl_of,
                             ordinary_line, ordinary_plane, ree_context,
                             sphere, unital_block, unital_blocks,
                             vertical_line, vertical_plane, w_set)
from reekit.ovoid import OvoidPoint
from reekit import io as rio

P3 = field_params(0)
ZERO = P3.zero
ONE = P3.one
INF = OvoidPoint.infinity()
ORIGIN = OvoidPoint.of(ZERO, ZERO, ZERO)


def ctx3():
    return ree_context(P3)


def test_block_counts_and_sizes():
    ctx = ctx3()
    assert len(ctx.circles) == 252
    assert len(ctx.spheres) == 84
    assert all(len(b.points) == 4 for b in ctx.circles)
    assert all(len(b.points) == 10 for b in ctx.spheres)


def test_block_validation():
    with pytest.raises(BlockDataError):
        Block("circle", INF, frozenset({ORIGIN}))
    with pytest.raises(BlockDataError):
        Block("square", ORIGIN, frozenset({ORIGIN}))
    with pytest.raises(ValueError):
        circle(INF, INF, P3)


def test_gnarl_recomputation_unique():
    ctx = ctx3()
    for b in ctx.circles[:30] + ctx.spheres[:10]:
        assert gnarl_of(b, ctx) == b.gnarl


def test_gnarl_of_rejects_corrupted_data():
    ctx = ctx3()
    good = ctx.circles[0]
    bad_points = set(good.points)
    replacement = next(p for p in ctx.points if p not in bad_points)
    bad_points.remove(next(iter(good.points - {good.gnarl})))
    bad_points.add(replacement)
    bad = Block("circle", good.gnarl, frozenset(bad_points))
    with pytest.raises(BlockDataError):
        gnarl_of(bad, ctx)


def test_circle_through_infinity_is_vertical_or_ordinary_line():
    # gnarl (inf): vertical line; affine gnarl: ordinary line
    b = circle(INF, ORIGIN, P3)
    assert b.points == set(vertical_line(ZERO, ZERO, P3).points) | {INF}
    c = circle(ORIGIN, INF, P3)
    assert c.points == set(ordinary_line(ZERO, ZERO, ZERO, P3).points) | {INF}


def test_sphere_through_infinity_matches_planes():
    s = sphere(INF, ORIGIN, P3)
    assert s.points == set(vertical_plane(ZERO, P3).points) | {INF}
    t = sphere(ORIGIN, INF, P3)
    assert t.points == set(ordinary_plane(ZERO, ZERO, ZERO, P3).points) | {INF}


def test_parallelism_criteria_agree():
    lines = [ordinary_line(a, b, c, P3)
             for a in P3.elements() for b in P3.elements()
             for c in P3.elements()]
    for l1 in lines[:9]:
        for l2 in lines:
            assert are_parallel(l1, l2) == are_parallel_definitional(l1, l2)


def test_unital_design_parameters():
    blocks = unital_blocks(P3)
    assert len(blocks) == 63
    assert all(len(b) == 4 for b in blocks)
    pts = ctx3().points
    for i, p in enumerate(pts):
        for q in pts[i + 1:]:
            assert sum(1 for b in blocks if p in b and q in b) == 1


def test_unital_block_through_two_points():
    p, q = ORIGIN, OvoidPoint.of(ONE, ZERO, ZERO)
    b = unital_block(p, q, P3)
    assert p in b and q in b and len(b) == 4
    assert unital_block(q, p, P3) == b


def test_w_set_base_point():
    digits = {tuple(c.digits() for c in p.triple) for p in w_set(ORIGIN, P3)}
    assert digits == {("0", "0", "0"), ("0", "1", "0"), ("0", "2", "0"),
                      ("0", "1", "1"), ("0", "1", "2")}


def test_w_set_rejects_infinity():
    with pytest.raises(ValueError):
        w_set(INF, P3)


# ---------------------------------------------------------------- exports

def test_ovoid_export_roundtrip():
    buf = io.StringIO()
    rio.export_ovoid(P3, buf)
    assert rio.import_ovoid(P3, io.StringIO(buf.getvalue())) == ctx3().points


def test_hexagon_export_roundtrip():
    buf = io.StringIO()
    rio.export_hexagon(P3, buf)
    pts, lns, pairs = rio.import_hexagon(P3, io.StringIO(buf.getvalue()))
    hx = ctx3().hexagon
    assert pts == hx.points
    assert lns == hx.lines
    assert len(pairs) == 4 * hx.n


def test_blocks_export_roundtrip_and_counts():
    buf = io.StringIO()
    rio.export_blocks(P3, buf)
    text = buf.getvalue()
    lines = text.splitlines()
    assert sum(1 for l in lines if l.startswith("C ")) == 252
    assert sum(1 for l in lines if l.startswith("S ")) == 84
    blocks = rio.import_blocks(P3, io.StringIO(text))
    ctx = ctx3()
    assert [(b.kind, b.gnarl, b.points) for b in blocks] == \
        [(b.kind, b.gnarl, b.points) for b in ctx.circles + ctx.spheres]


def test_blocks_import_rejects_wrong_gnarl():
    buf = io.StringIO()
    rio.export_blocks(P3, buf, ctx3().circles[:1])
    head, _, tail = buf.getvalue().partition(":")
    tag, marked = head.split()
    wrong = next(t for t in tail.split() if t != marked)
    with pytest.raises(BlockDataError):
        rio.import_blocks(P3, io.StringIO(f"{tag} {wrong} :{tail}"))


def test_unital_export_roundtrip():
    buf = io.StringIO()
    rio.export_unital(P3, buf)
    assert rio.import_unital(P3, io.StringIO(buf.getvalue())) == \
        unital_blocks(P3)


def test_parse_error_carries_line_number():
    with pytest.raises(rio.ParseError) as err:
        rio.import_ovoid(P3, io.StringIO("O inf\nQ 0,0,0\n"))
    assert err.value.lineno == 2
