from reekit.field import field_params
from reekit.symbolic import (FormalPoly, ThetaExponent, group_commutator,
                             group_inv, group_mul, run_identity_checks,
                             sym_triple)

P27 = field_params(1)


def test_theta_exponent_action():
    assert ThetaExponent(1, 0).theta() == ThetaExponent(0, 1)
    assert ThetaExponent(0, 1).theta() == ThetaExponent(3, 0)
    e = ThetaExponent(2, 5).theta().theta()
    assert (e.m, e.n) == (6, 15)


def test_poly_canonical_forms():
    x = FormalPoly.var("x")
    assert x + x + x == FormalPoly.zero()
    assert x - x == FormalPoly.zero()
    assert (x + x) == -x
    assert len(x * x) == 1
    assert FormalPoly.const(3) == FormalPoly.zero()


def test_theta_on_poly_is_endomorphism():
    x, y = FormalPoly.var("x"), FormalPoly.var("y")
    p = x * x + FormalPoly.const(2) * y
    q = x * y + FormalPoly.const(1)
    assert (p + q).theta() == p.theta() + q.theta()
    assert (p * q).theta() == p.theta() * q.theta()


def test_theta_squared_is_frobenius():
    x = FormalPoly.var("x")
    assert x.theta().theta() == x ** 3


def test_group_inverse_and_associativity():
    u, v, w = sym_triple("x"), sym_triple("y"), sym_triple("z")
    zero = (FormalPoly.zero(),) * 3
    assert group_mul(u, group_inv(u)) == zero
    assert group_mul(group_mul(u, v), w) == group_mul(u, group_mul(v, w))


def test_commutator_of_central_elements_trivial():
    z1 = (FormalPoly.zero(), FormalPoly.zero(), FormalPoly.var("x2"))
    z2 = (FormalPoly.zero(), FormalPoly.zero(), FormalPoly.var("y2"))
    assert group_commutator(z1, z2) == (FormalPoly.zero(),) * 3


def test_identity_battery_statuses():
    results = {r.name: r.ok for r in run_identity_checks()}
    assert results["theta_square_is_cube"]
    assert results["cube_additivity_char3"]
    assert results["group_inverse"]
    assert results["group_associativity"]
    assert results["derived_vs_full_commutator"]
    assert results["cube_formula"]
    # the displayed commutator formula differs from the actual commutator
    # by a central element; the faithful check records the discrepancy and
    # the mod-center check pins it down exactly
    assert not results["commutator_display"]
    assert results["commutator_display_mod_center"]


def test_commutator_discrepancy_is_central_and_vanishes_on_gf3():
    # numeric confirmation of the mod-center relationship over GF(27)
    u, v = sym_triple("x"), sym_triple("y")
    com = group_commutator(u, v)
    names = [p + s for p in "xy" for s in ("", "1", "2")]
    import random
    rng = random.Random(7)
    for _ in range(50):
        env = {n: P27.random_element(rng) for n in names}
        c0 = com[0].evaluate(env, P27)
        assert not c0  # first commutator coordinate is always zero
    # over GF(3) theta is the identity, so the correction term
    # (x+y)(x y^theta - y x^theta) vanishes identically
    p3 = field_params(0)
    corr = (u[0] + v[0]) * (u[0] * v[0].theta() - v[0] * u[0].theta())
    for a in p3.elements():
        for b in p3.elements():
            env = {"x": a, "y": b}
            assert not corr.evaluate(env, p3)


def test_substitute_expands_theta_exponents():
    x = FormalPoly.var("x", 1, 1)  # x^(1+theta)
    y = FormalPoly.var("y")
    expanded = x.substitute({"x": y})
    assert expanded == y * y.theta()
