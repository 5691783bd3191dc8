import random

import pytest

from reekit.field import field_params
from reekit.hexagon import HexElement, hexagon_geometry, incident
from reekit.ovoid import (KnownCollineation, OvoidPoint, compact_to_hex,
                          compact_to_proj, hex_to_compact, is_absolute,
                          known_collineation, ovoid, polarity,
                          root_subgroup_orbit, subgroup_elements,
                          transporter_to, u_infty_apply, u_infty_inv,
                          u_infty_mul, u_zero_apply, u_zero_matrix,
                          u_zero_params_of_matrix)
from reekit.field import FieldDomainError
from reekit.hexagon import to_projective

P3 = field_params(0)
P27 = field_params(1)


def test_polarity_involution_q3():
    hx = hexagon_geometry(P3)
    for el in hx.points + hx.lines:
        back = polarity(polarity(el))
        assert back == el


def test_polarity_swaps_kinds():
    img = polarity(compact_to_hex(OvoidPoint.infinity(), P3))
    assert img.kind == "line"


def test_absolute_points_q3():
    hx = hexagon_geometry(P3)
    absolute = {p for p in hx.points if is_absolute(p)}
    assert len(absolute) == 28
    assert absolute == {compact_to_hex(c, P3) for c in ovoid(P3)}
    for p in absolute:
        assert incident(p, polarity(p))


def test_is_absolute_total_on_all_arities():
    zero = P3.zero
    assert is_absolute(compact_to_hex(OvoidPoint.infinity(), P3))
    for n in range(1, 5):
        assert not is_absolute(HexElement("point", (zero,) * n))


def test_dictionary_roundtrip():
    for c in ovoid(P3):
        assert hex_to_compact(compact_to_hex(c, P3)) == c
    rng = random.Random(0)
    for _ in range(100):
        c = OvoidPoint.of(*(P27.random_element(rng) for _ in range(3)))
        assert hex_to_compact(compact_to_hex(c, P27)) == c
        assert compact_to_proj(c, P27) == to_projective(
            compact_to_hex(c, P27), P27)


def test_u_infty_group_law():
    rng = random.Random(0)
    zero_triple = (P27.zero,) * 3
    for _ in range(100):
        t1 = tuple(P27.random_element(rng) for _ in range(3))
        t2 = tuple(P27.random_element(rng) for _ in range(3))
        t3 = tuple(P27.random_element(rng) for _ in range(3))
        assert u_infty_mul(t1, u_infty_inv(t1)) == zero_triple
        assert (u_infty_mul(u_infty_mul(t1, t2), t3)
                == u_infty_mul(t1, u_infty_mul(t2, t3)))


def test_u_infty_sharply_transitive_q3():
    pts = ovoid(P3)[1:]
    for p in pts[:5]:
        images = {u_infty_apply(t.params, p)
                  for t in subgroup_elements("infinity", "full", P3)}
        assert images == set(pts)


def test_u_zero_fixes_origin_and_preserves_ovoid():
    zero = P3.zero
    origin = OvoidPoint.of(zero, zero, zero)
    for g in subgroup_elements("zero", "full", P3):
        assert u_zero_apply(g.params, origin, P3) == origin
        for p in ovoid(P3)[:10]:
            u_zero_apply(g.params, p, P3)  # raises if off the ovoid


def test_u_zero_matrix_parameters_roundtrip():
    rng = random.Random(3)
    for _ in range(50):
        t = tuple(P27.random_element(rng) for _ in range(3))
        m = u_zero_matrix(*t)
        assert u_zero_params_of_matrix(m) == t


def test_transporter_moves_infinity_to_target():
    rng = random.Random(5)
    for params in (P3, P27):
        for _ in range(10):
            target = OvoidPoint.of(*(params.random_element(rng)
                                     for _ in range(3)))
            t = transporter_to(target, params)
            assert t.apply(OvoidPoint.infinity()) == target
            assert t.apply_inv(target) == OvoidPoint.infinity()


def test_orbit_sizes():
    zero = P3.zero
    origin = OvoidPoint.of(zero, zero, zero)
    inf = OvoidPoint.infinity()
    assert len(root_subgroup_orbit(inf, origin, "center", P3)) == 3
    assert len(root_subgroup_orbit(inf, origin, "derived", P3)) == 9
    assert len(root_subgroup_orbit(origin, inf, "center", P3)) == 3
    assert len(root_subgroup_orbit(origin, inf, "derived", P3)) == 9


def test_known_collineation():
    with pytest.raises(FieldDomainError):
        known_collineation(P3.zero)
    coll = known_collineation(P3.scalar(2))
    assert isinstance(coll, KnownCollineation)
    # scaling preserves the ovoid pointwise family
    for p in ovoid(P3):
        image = coll.apply(p)
        assert is_absolute(compact_to_hex(image, P3))
