import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from app.models import FourierState, PolynomialSymbol, QuadratureSpec, SegmentSpec
from app.utils.errors import InvalidInputError

SCHRODINGER = PolynomialSymbol(coeffs=(0, 0, 1))
KDV = PolynomialSymbol(coeffs=(0, 0, 0, 1))

coefficients = st.complex_numbers(max_magnitude=1.5, allow_nan=False, allow_infinity=False)
states = st.dictionaries(st.integers(-10, 10), coefficients, min_size=1, max_size=8).map(
    lambda c: FourierState(coefficients=c)
)
rationals = st.fractions(min_value=-3, max_value=3, max_denominator=5)


@given(states, st.floats(0, 5), st.sampled_from([SCHRODINGER, KDV]))
@settings(max_examples=50, deadline=None)
def test_unitarity(numeric_service, state, t, sym):
    assert numeric_service.unitarity_residual(state, sym, t, 64) < 1e-10


def test_unitarity_rejects_aliasing(numeric_service):
    state = FourierState(coefficients={12: 1})
    with pytest.raises(InvalidInputError):
        numeric_service.unitarity_residual(state, SCHRODINGER, 0.5, 16)


@given(
    st.integers(-8, 8), st.integers(-8, 8), coefficients, coefficients,
    rationals, rationals, rationals, st.floats(0.5, 2.0),
)
@settings(max_examples=50, deadline=None)
def test_two_mode_closed_form(numeric_service, k1, k2, c1, c2, v, t0, x0, T):
    if k1 == k2:
        return
    state = FourierState(coefficients={k1: c1, k2: c2})
    seg = SegmentSpec(t0=str(t0), x0=str(x0), v=v, T=T)
    exact = numeric_service.two_mode_closed_form(state, SCHRODINGER, seg)
    assert numeric_service.segment_l2(state, SCHRODINGER, seg) == pytest.approx(exact, rel=1e-9, abs=1e-9)


def test_quadrature_refinement_is_stable(numeric_service, kdv):
    state = FourierState(coefficients={-3: 1, -1: 0.5j, 2: -1, 4: 0.25, 7: 1 - 1j})
    seg = SegmentSpec(t0="1/7", x0="pi/3", v="5/2", T=3.0)
    coarse = numeric_service.segment_l2(state, kdv, seg, QuadratureSpec(panels=1, nodes_per_panel=4))
    fine = numeric_service.segment_l2(state, kdv, seg, QuadratureSpec(panels=256, nodes_per_panel=12))
    assert coarse == pytest.approx(fine, rel=1e-9)


def test_single_mode(numeric_service):
    state = FourierState(coefficients={2: 1})
    seg = SegmentSpec(v=1, T=2.0)
    assert numeric_service.evaluate_on_segment(state, SCHRODINGER, seg, 0.3) == pytest.approx(cmath.exp(0.6j))
    assert numeric_service.segment_l2(state, SCHRODINGER, seg) == pytest.approx(2.0)
    assert numeric_service.direct_constant([state], SCHRODINGER, seg) == pytest.approx(1 / math.pi)
    assert numeric_service.frame_ratio(state, SCHRODINGER, [seg, seg]) == pytest.approx(2 / math.pi)


def test_segment_trace(numeric_service):
    state = FourierState(coefficients={0: 1, 3: 1j})
    rows = numeric_service.segment_trace(state, SCHRODINGER, SegmentSpec(v=1, T=1.0), 5)
    assert [row[0] for row in rows] == [0.0, 0.25, 0.5, 0.75, 1.0]
    for _, re, im, modulus_sq in rows:
        assert modulus_sq == pytest.approx(re * re + im * im)


def test_zero_state(numeric_service):
    empty = FourierState()
    seg = SegmentSpec(v=0)
    assert numeric_service.segment_l2(empty, SCHRODINGER, seg) == 0.0
    assert numeric_service.max_modulus(empty, SCHRODINGER, seg, 10) == 0.0
    with pytest.raises(InvalidInputError):
        numeric_service.frame_ratio(empty, SCHRODINGER, [seg])


def test_closed_form_limits(numeric_service):
    state = FourierState(coefficients={0: 1, 1: 1, 2: 1})
    with pytest.raises(InvalidInputError):
        numeric_service.two_mode_closed_form(state, SCHRODINGER, SegmentSpec(v=0))


@given(states, st.floats(0, 2 * math.pi), rationals)
@settings(max_examples=30, deadline=None)
def test_global_phase_and_period_do_not_change_energy(numeric_service, state, theta, v):
    rotated = FourierState(coefficients={k: c * cmath.exp(1j * theta) for k, c in state.coefficients.items()})
    seg = SegmentSpec(x0="1/2pi", v=v, T=1.0)
    shifted = SegmentSpec(x0="5/2pi", v=v, T=1.0)
    base = numeric_service.segment_l2(state, SCHRODINGER, seg)
    assert numeric_service.segment_l2(rotated, SCHRODINGER, seg) == pytest.approx(base, rel=1e-9, abs=1e-9)
    assert numeric_service.segment_l2(state, SCHRODINGER, shifted) == pytest.approx(base, rel=1e-9, abs=1e-9)


def _random_state(rng, modes):
    values = rng.normal(size=len(modes)) + 1j * rng.normal(size=len(modes))
    return FourierState(coefficients={int(k): complex(c) for k, c in zip(modes, values)})


def test_frame_ratio_bounded_below_on_random_states(numeric_service):
    rng = np.random.default_rng(40)
    seg = SegmentSpec(v="1/2", T=1.0)
    ratios = [numeric_service.frame_ratio(_random_state(rng, range(-20, 20)), SCHRODINGER, [seg]) for _ in range(100)]
    assert min(ratios) > 1e-3


def test_direct_constant_bounded_on_random_states(numeric_service):
    # 2 lambda_k = 2k^2 - k takes distinct integer values, so frequencies are at least 1/2 apart
    rng = np.random.default_rng(50)
    seg = SegmentSpec(v="1/2", T=1.0)
    first = numeric_service.direct_constant([_random_state(rng, range(-25, 25)) for _ in range(10)], SCHRODINGER, seg)
    second = numeric_service.direct_constant([_random_state(rng, range(-25, 25)) for _ in range(10)], SCHRODINGER, seg)
    assert 0 < first < 4
    assert 0 < second < 4
