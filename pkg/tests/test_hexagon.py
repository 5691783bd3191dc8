import pytest

from reekit.field import field_params
from reekit.hexagon import (HexElement, IncidenceUsageError, incident,
                            infinity_line, infinity_point, hexagon_geometry,
                            line, point, point_in_line_span, to_projective)

P3 = field_params(0)
P27 = field_params(1)


def hx3():
    return hexagon_geometry(P3)


def test_element_validation():
    with pytest.raises(IncidenceUsageError):
        HexElement("blob", ())
    with pytest.raises(IncidenceUsageError):
        HexElement("point", (P3.zero,) * 6)
    with pytest.raises(IncidenceUsageError):
        incident(infinity_point(), infinity_point())


def test_prefix_incidence():
    zero, one = P3.zero, P3.one
    assert incident(infinity_point(), infinity_line())
    assert incident(point(one), infinity_line())
    assert incident(point(one), line(one, zero))
    assert not incident(point(one), line(zero, zero))
    assert not incident(point(one, zero, one), line(one))  # arity gap 2


def test_counts_and_regularity():
    hx = hx3()
    assert hx.n == 364 == sum(3 ** i for i in range(6))
    assert set(hx.degrees()) == {4}


def test_girth_and_diameter():
    hx = hx3()
    assert hx.girth() == 12
    assert hx.diameter() == 6


def test_axiom_report():
    report = hx3().check_axioms()
    assert report["ok"], report["witnesses"]


def test_five_coordinate_incidence_matches_span():
    # spot pairs: the known generator pairs of a 5-coordinate line
    hx = hx3()
    five_lines = [L for L in hx.lines if L.arity == 5]
    for L in five_lines[:20]:
        for i in hx.adj[hx.vertex(L)]:
            p = hx.points[i]
            assert point_in_line_span(p, L, P3)


def test_incident_pairs_span_q27_samples():
    import random
    rng = random.Random(1)
    for _ in range(50):
        coords = tuple(P27.random_element(rng) for _ in range(5))
        L = HexElement("line", coords)
        p = HexElement("point", coords[:4])
        assert incident(p, L)
        assert point_in_line_span(p, L, P27)


def test_projective_images_are_normalized():
    hx = hx3()
    for p in hx.points[:50]:
        pp = to_projective(p, P3)
        lead = next(c for c in pp.coords if c)
        assert lead == P3.one


def test_distance_symmetry_examples():
    hx = hx3()
    a = infinity_point()
    b = point(P3.one, P3.zero, P3.one, P3.zero, P3.one)
    assert hx.distance(a, b) == hx.distance(b, a)
    assert hx.distance(a, a) == 0
