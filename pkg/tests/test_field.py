import pytest
from hypothesis import given, settings, strategies as st

from reekit.field import (DEFAULT_MODULI, FieldDomainError, FieldUsageError,
                          field_params, parse_field_flag)

P3 = field_params(0)
P27 = field_params(1)


def test_default_moduli():
    assert DEFAULT_MODULI[0] == (0, 1)
    assert DEFAULT_MODULI[1] == (2, 2, 0, 1)
    assert P3.q == 3
    assert P27.q == 27


def test_element_reduction_and_equality():
    x = P27.element([5, -1, 3])
    assert x == P27.element([2, 2, 0])
    assert hash(x) == hash(P27.element([2, 2]))


def test_arithmetic_small_field():
    one, two = P3.one, P3.scalar(2)
    assert one + two == P3.zero
    assert two * two == one
    assert -one == two
    assert (two / two) == one


def test_inverse_and_zero_division():
    for x in P27.elements():
        if x:
            assert x * x.inverse() == P27.one
    with pytest.raises(FieldDomainError):
        P27.zero.inverse()


def test_theta_is_tits_endomorphism():
    for params in (P3, P27):
        for x in params.elements():
            assert x.theta().theta() == x ** 3
            assert x.theta().theta_inv() == x
            assert x.theta_inv().theta() == x


def test_theta_on_gf3_is_identity():
    for x in P3.elements():
        assert x.theta() == x


def test_cross_field_operations_rejected():
    with pytest.raises(FieldUsageError):
        P3.one + P27.one


def test_parse_field_flag():
    assert parse_field_flag("0") == P3
    assert parse_field_flag("1") == P27
    assert parse_field_flag("1:2,2,0,1") == P27
    with pytest.raises(FieldUsageError):
        parse_field_flag("banana")
    with pytest.raises(FieldUsageError):
        parse_field_flag("1:1,0,0,1")  # t^3 + 1 = (t+1)^3 is reducible


def test_digits_roundtrip():
    for x in P27.elements():
        assert P27.element([int(d) for d in x.digits()]) == x


coeff = st.integers(min_value=0, max_value=2)
triple27 = st.tuples(coeff, coeff, coeff)


@settings(max_examples=50, deadline=None)
@given(triple27, triple27, triple27)
def test_field_axioms_hypothesis(a, b, c):
    x, y, z = (P27.element(list(t)) for t in (a, b, c))
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x * y == y * x


@settings(max_examples=50, deadline=None)
@given(triple27, triple27)
def test_theta_homomorphism_hypothesis(a, b):
    x, y = P27.element(list(a)), P27.element(list(b))
    assert (x + y).theta() == x.theta() + y.theta()
    assert (x * y).theta() == x.theta() * y.theta()
