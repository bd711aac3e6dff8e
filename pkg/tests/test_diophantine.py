from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from app.models import PolynomialSymbol
from app.utils.errors import DegenerateGapError, InvalidInputError
from app.utils.integer_roots import integer_roots

from .conftest import divided_difference


def test_kdv_pi_set(diophantine_service, kdv):
    pairs = diophantine_service.pi_set(kdv, 7)
    assert set(pairs.finite_pairs) == {(-3, 1), (-3, 2), (-2, -1), (-2, 3), (-1, 3), (1, 2)}
    assert pairs.infinite_families == ()

    assert set(diophantine_service.pi_set(kdv, 3).finite_pairs) == {(-2, 1), (-1, 2)}
    assert diophantine_service.pi_set(kdv, 5).is_empty()


@pytest.mark.parametrize("v, families", [(0, (0,)), (3, (3,)), (-2, (-2,)), (Fraction(1, 2), ()), (Fraction(7, 3), ())])
def test_schrodinger_pi_set(diophantine_service, schrodinger, v, families):
    pairs = diophantine_service.pi_set(schrodinger, v)
    assert pairs.infinite_families == families
    assert pairs.finite_pairs == ()


def test_quartic_pi_set(diophantine_service, quartic):
    at_zero = diophantine_service.pi_set(quartic, 0)
    assert at_zero.infinite_families == (0,)
    assert at_zero.finite_pairs == ()

    at_two = diophantine_service.pi_set(quartic, 2)
    assert at_two.finite_pairs == ((0, 1),)
    assert at_two.infinite_families == ()


def test_xi_class(diophantine_service, kdv):
    cls = diophantine_service.xi_class(kdv, 7, 1)
    assert set(cls.members) == {-3, 1, 2}
    assert cls.size == 3
    assert diophantine_service.is_resonant(kdv, 7, 2)
    assert not diophantine_service.is_resonant(kdv, 7, 10)


def test_xi_class_degenerate(diophantine_service):
    with pytest.raises(DegenerateGapError):
        diophantine_service.xi_class(PolynomialSymbol(coeffs=(0, 1)), 1, 4)


def test_pi_set_needs_degree_two(diophantine_service):
    with pytest.raises(InvalidInputError):
        diophantine_service.pi_set(PolynomialSymbol(coeffs=(1, 2)), 0)


def test_disk_radius_covers_pairs(diophantine_service, kdv):
    radius = diophantine_service.resonance_bound(kdv, 49)["disk_radius"]
    pairs = diophantine_service.pi_set(kdv, 49).finite_pairs
    assert pairs
    assert all(k * k + m * m < radius * radius for k, m in pairs)


def test_sum_band_covers_families(diophantine_service, schrodinger):
    assert diophantine_service.resonance_bound(schrodinger, 3) == {"sum_band": 3}


def test_class_sizes(diophantine_service, kdv):
    assert diophantine_service.class_sizes(kdv, 3, [2, -1, 4]) == {2: 2, -1: 2, 4: 1}


def test_evaluate_row_matches_divided_difference(diophantine_service, symbol_service, kdv):
    for k, m in [(1, 2), (3, -5), (-4, 0)]:
        assert diophantine_service.evaluate_row(kdv, 7, k, m) == symbol_service.divided_diff(kdv, 7, k, m)


@pytest.mark.parametrize("coeffs, roots", [
    ([-6, 11, -6, 1], [1, 2, 3]),
    ([0, 0, 1], [0]),
    ([Fraction(1, 2), Fraction(-3, 2), 1], [1]),
    ([1, 0, 1], []),
    ([30021, -10010, 1], [3, 10007]),
])
def test_integer_roots(coeffs, roots):
    assert sorted(integer_roots(coeffs)) == roots


def test_integer_roots_zero_polynomial():
    with pytest.raises(ValueError):
        integer_roots([0, 0])


symbols = st.lists(st.integers(-5, 5), min_size=3, max_size=6).filter(lambda c: c[-1] != 0)
distinct_modes = st.tuples(st.integers(-4, 4), st.integers(-4, 4)).filter(lambda p: p[0] != p[1])


@st.composite
def symbols_with_slopes(draw):
    """(symbol, slope, pair resonating under the slope or None)"""
    sym = PolynomialSymbol(coeffs=tuple(draw(symbols)))
    if draw(st.booleans()):
        k, m = draw(distinct_modes)
        return sym, divided_difference(sym, k, m), (min(k, m), max(k, m))
    return sym, draw(st.fractions(min_value=-30, max_value=30, max_denominator=6)), None


@given(symbols_with_slopes())
@settings(max_examples=20, deadline=None)
def test_pi_set_matches_oracle(diophantine_service, case):
    sym, v, pair = case
    window = 200
    solved = diophantine_service.pi_set(sym, v).pairs_in_window(window)
    assert solved == diophantine_service.pi_oracle(sym, v, window)
    if pair is not None:
        assert pair in solved


@pytest.mark.parametrize("coeffs, v, count", [((0, 0, 1), 3, 199), ((0, 0, 1, 0, 1), 0, 200)])
def test_family_pairs_match_oracle(diophantine_service, coeffs, v, count):
    sym = PolynomialSymbol(coeffs=coeffs)
    pairs = diophantine_service.pi_set(sym, v)
    assert pairs.infinite_families
    solved = pairs.pairs_in_window(200)
    assert len(solved) == count
    assert solved == diophantine_service.pi_oracle(sym, v, 200)


@given(symbols_with_slopes(), st.integers(-15, 15))
@settings(max_examples=50, deadline=None)
def test_classes_partition_the_integers(diophantine_service, case, k):
    sym, v, _ = case
    members = set(diophantine_service.xi_class(sym, v, k).members)
    assert k in members
    for j in members:
        assert set(diophantine_service.xi_class(sym, v, j).members) == members


@given(symbols_with_slopes())
@settings(max_examples=30, deadline=None)
def test_classes_beyond_n_v_have_at_most_two_members(decision_service, diophantine_service, case):
    sym, v, _ = case
    hypotheses = decision_service.check_hypotheses(sym, v)
    assert hypotheses.h1 and hypotheses.h2
    n_v = hypotheses.n_v
    tail = list(range(n_v, n_v + 25)) + list(range(-n_v - 24, -n_v + 1))
    assert all(size <= 2 for size in diophantine_service.class_sizes(sym, v, tail).values())
