from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from app.models import CriterionOutcome, VerdictReason
from app.utils.errors import InvalidInputError

from .conftest import divided_difference


@pytest.mark.parametrize("v, representation", [
    (3, (2, -1)),
    (7, (2, 1)),
    (4, (2, 0)),
    (1, (1, 0)),
    (5, None),
    (0, None),
    (-3, None),
])
def test_gamma_membership(applications_service, v, representation):
    certificate = applications_service.gamma_membership(v)
    assert certificate.member == (representation is not None)
    assert certificate.representation == representation


def test_gamma_members(applications_service):
    assert applications_service.gamma_members(20) == [1, 3, 4, 7, 9, 12, 13, 16, 19]


def test_kdv_one_segment(applications_service, decision_service, kdv):
    resonant = applications_service.kdv_one_segment(3)
    assert resonant.reason is VerdictReason.RESONANT_PAIR
    assert resonant.resonant_pair == (-1, 2)
    assert decision_service.validate_verdict(kdv, resonant)

    for v in (5, Fraction(7, 2), -4):
        assert applications_service.kdv_one_segment(v).quantitative


def test_kdv_one_segment_matches_exhaustive_scan(applications_service, decision_service, diophantine_service, kdv):
    # k^2 + km + m^2 >= (k^2 + m^2) / 2, so |k|, |m| <= 20 covers v <= 200
    for v in range(-5, 201):
        special = applications_service.kdv_one_segment(v)
        scanned = diophantine_service.pi_oracle(kdv, v, 20)
        assert special.qualitative == (not scanned), v
        assert special.qualitative == decision_service.decide_one_segment(kdv, v).qualitative
        if scanned:
            assert special.resonant_pair in scanned


@pytest.mark.parametrize("v, p, expected", [(12, 2, 2), (-8, 2, 3), (45, 5, 1), (7, 5, 0)])
def test_ord_p(applications_service, v, p, expected):
    assert applications_service.ord_p(v, p) == expected


def test_ord_p_rejects(applications_service):
    with pytest.raises(InvalidInputError):
        applications_service.ord_p(0, 2)
    with pytest.raises(InvalidInputError):
        applications_service.ord_p(12, 4)


def test_kdv_criterion(applications_service):
    assert applications_service.kdv_two_segment_criterion(7, 49).outcome is CriterionOutcome.OBSERVABLE_BY_1
    assert applications_service.kdv_two_segment_criterion(49, 7).outcome is CriterionOutcome.OBSERVABLE_BY_1

    by_valuation = applications_service.kdv_two_segment_criterion(4, 7)
    assert by_valuation.outcome is CriterionOutcome.OBSERVABLE_BY_2
    assert by_valuation.prime == 2
    assert by_valuation.valuations == (2, 0)
    assert by_valuation.fallback is None

    inconclusive = applications_service.kdv_two_segment_criterion(3, 7)
    assert inconclusive.outcome is CriterionOutcome.INCONCLUSIVE
    assert inconclusive.fallback.reason is VerdictReason.TWO_COLORED_CYCLE

    with pytest.raises(InvalidInputError):
        applications_service.kdv_two_segment_criterion(5, 5)


def test_kdv_criterion_is_sound(applications_service, decision_service, kdv):
    for v1, v2 in combinations(range(1, 201), 2):
        result = applications_service.kdv_two_segment_criterion(v1, v2)
        if result.outcome is CriterionOutcome.INCONCLUSIVE:
            continue
        verdict = decision_service.decide_two_segments(kdv, v1, v2)
        assert verdict.quantitative, (v1, v2, result.outcome)


def test_find_kdv_cycles(applications_service, graph_service, kdv):
    found = applications_service.find_kdv_cycles(30)
    assert found[0][:2] == (3, 7)
    for v1, v2, cycle in found:
        assert v1 < v2
        assert graph_service.validate_cycle(kdv, cycle)


slopes = st.one_of(st.integers(-3, 3).map(Fraction), st.sampled_from([Fraction(1, 2), Fraction(1, 3), Fraction(5, 2)]))


@given(slopes, slopes)
@settings(max_examples=40, deadline=None)
def test_schrodinger_dichotomy(applications_service, decision_service, v1, v2):
    assume(v1 != v2)
    special = applications_service.schrodinger_verdict(v1, v2)
    general = decision_service.decide_two_segments(special.symbol, v1, v2)
    assert special.qualitative
    assert special.quantitative == (v1.denominator != 1 or v2.denominator != 1)
    assert (general.qualitative, general.quantitative) == (special.qualitative, special.quantitative)
    assert general.reason is special.reason


def _random_slope_pairs(sym, modes, count, seed):
    """Seeded distinct slope pairs, alternating resonant divided differences with plain rationals"""
    rng = np.random.default_rng(seed)
    pairs = []
    while len(pairs) < count:
        slopes = []
        for _ in range(2):
            if len(pairs) % 2 == 0:
                k, m = (int(x) for x in rng.choice(np.arange(-modes, modes + 1), size=2, replace=False))
                slopes.append(divided_difference(sym, k, m))
            else:
                slopes.append(Fraction(int(rng.integers(-40, 41)), int(rng.integers(1, 7))))
        if slopes[0] != slopes[1] and tuple(slopes) not in pairs:
            pairs.append(tuple(slopes))
    return pairs


@pytest.mark.parametrize("l, modes", [(2, 3), (3, 2)])
def test_higher_schrodinger(applications_service, decision_service, graph_service, l, modes):
    sym = applications_service.higher_schrodinger_symbol(l)
    assert sym.degree == 2 * l
    pairs = _random_slope_pairs(sym, modes, 20, seed=l)
    assert len(pairs) == 20
    for v1, v2 in pairs:
        verdict = applications_service.higher_schrodinger_verdict(l, v1, v2)
        assert (verdict.qualitative, verdict.quantitative) == (True, True)
        general = decision_service.decide_two_segments(sym, v1, v2)
        assert (general.qualitative, general.quantitative) == (True, True)
        assert not graph_service.has_two_colored_cycle(graph_service.build_graph(sym, v1, v2))[0]
