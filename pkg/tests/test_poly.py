from fractions import Fraction
from random import Random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from supersmooth import (
    BiPoly,
    InvalidDirectionError,
    UniPoly,
    X,
    Y,
    directional_derivative,
    linear_form_power,
    restrict_to_ray,
)
from helpers import random_bipoly, random_direction

coefficients = st.fractions(min_value=-9, max_value=9, max_denominator=5)
monomials = st.tuples(st.integers(0, 4), st.integers(0, 4))
bipolys = st.dictionaries(monomials, coefficients, max_size=6).map(BiPoly)
directions = st.tuples(st.integers(-5, 5), st.integers(-5, 5)).filter(lambda d: d != (0, 0))


def test_product_difference_of_squares():
    assert (X + Y) * (X - Y) == X**2 - Y**2


def test_square_of_binomial():
    assert (Y + 2 * X) ** 2 == Y**2 + 4 * X * Y + 4 * X**2


def test_subtraction_collapses_to_zero():
    p = 3 * X**2 * Y - Y + 7
    assert (p - p).is_zero
    assert (p - p).terms == {}


def test_partial_power_rule():
    assert (X**2 * Y).partial(1, 0) == 2 * X * Y


def test_partial_mixed_on_cube():
    # Independent route: k-th partials of (y+ax)^n scale by n!/(n-k)! * a^j.
    n, j, a = 3, 1, 2
    expected = linear_form_power(a, n - 2).scale(Fraction(6) * a**j)
    assert (Y + 2 * X) ** 3 == linear_form_power(2, 3)
    assert ((Y + 2 * X) ** 3).partial(1, 1) == expected
    assert expected == 12 * Y + 24 * X


def test_partial_of_constant():
    assert BiPoly.constant(5).partial(1, 0).is_zero


def test_directional_derivative_product_rule():
    assert directional_derivative(X * Y, (1, 1)) == X + Y


def test_directional_derivative_single_variable():
    assert directional_derivative(Y**3, (0, 1)) == 3 * Y**2


@pytest.mark.parametrize("n", [1, 2, 3])
def test_directional_derivative_along_level_line(n):
    # (1, -2) is tangent to y + 2x = 0, so the derivative of its powers vanishes.
    assert directional_derivative((Y + 2 * X) ** n, (1, -2)).is_zero


def test_directional_derivative_rejects_zero_direction():
    with pytest.raises(InvalidDirectionError):
        directional_derivative(X, (0, 0))


def test_restrict_symmetric_cancellation():
    assert restrict_to_ray(Y**2 - X**2, (1, 1)).is_zero


def test_restrict_direct_substitution():
    assert restrict_to_ray(X * Y, (2, 1)) == UniPoly([0, 0, 2])


def test_restrict_along_level_line():
    # direct substitution: (-2t + 2t)^3 = 0
    assert restrict_to_ray((Y + 2 * X) ** 3, (1, -2)).is_zero


def test_restrict_rejects_zero_direction():
    with pytest.raises(InvalidDirectionError):
        restrict_to_ray(X, (0, 0))


def test_linear_form_power_examples():
    assert linear_form_power(2, 2) == Y**2 + 4 * X * Y + 4 * X**2
    assert linear_form_power(Fraction(7, 3), 0) == BiPoly.constant(1)
    assert linear_form_power(1, 3) == Y**3 + 3 * X * Y**2 + 3 * X**2 * Y + X**3


def test_evaluate_examples():
    assert (Y**2 + 4 * X * Y + 4 * X**2).evaluate(1, -2) == 0
    assert (X + Y).evaluate(0, 0) == 0
    assert (3 * X**2 - Y).evaluate(Fraction(1, 2), Fraction(1, 4)) == Fraction(1, 2)


@given(bipolys, directions, directions)
def test_directional_derivatives_commute(p, u, v):
    du_dv = directional_derivative(directional_derivative(p, u), v)
    dv_du = directional_derivative(directional_derivative(p, v), u)
    assert du_dv == dv_du


@given(bipolys, directions)
def test_chain_rule_for_restriction(p, v):
    # Restricting the directional derivative equals differentiating the
    # restriction; this is what makes unnormalized directions harmless.
    lhs = restrict_to_ray(directional_derivative(p, v), v)
    rhs = restrict_to_ray(p, v).derivative()
    assert lhs == rhs


def test_unipoly_normalizes_trailing_zeros():
    assert UniPoly([1, 2, 0, 0]).coefficients == (1, 2)
    assert UniPoly([0, 0]).is_zero
    assert UniPoly([]).degree() == -1


def test_chain_rule_seeded_sweep():
    rng = Random(20240517)
    for _ in range(25):
        p = random_bipoly(rng)
        v = random_direction(rng)
        assert restrict_to_ray(directional_derivative(p, v), v) == restrict_to_ray(p, v).derivative()
