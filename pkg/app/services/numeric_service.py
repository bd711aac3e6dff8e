"""
Nonharmonic Fourier sums along observation segments.

Along a segment the solution is sum_k a_k e^{i lambda_k(v) t} with
a_k = c_k e^{i(p(k) t0 + k x0)}. Phases of the a_k are reduced mod 2pi in exact
arithmetic, and frequencies are shifted by a reference lambda so the float
exponent stays small; the shift is a unimodular factor and drops out of |u|.
"""

import math
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial.legendre import leggauss

from ..config.config import config
from ..models import FourierState, PolynomialSymbol, QuadratureSpec, Quantity, SegmentSpec
from ..utils.errors import InvalidInputError
from ..utils.logger import get_logger

logger = get_logger("numeric_service")

MAX_REFINEMENTS = 6


class PhaseTable:
    """Per-segment amplitudes and shifted frequencies of a state"""

    def __init__(self, amplitudes: np.ndarray, frequencies: np.ndarray, reference: Fraction):
        self.amplitudes = amplitudes
        self.frequencies = frequencies
        self.reference = reference

    @property
    def spread(self) -> float:
        if self.frequencies.size == 0:
            return 0.0
        return float(self.frequencies.max() - self.frequencies.min())


class NumericService:
    """Evaluation, segment L2 integrals, Parseval norms and frame ratios"""

    def __init__(self, symbol_service=None):
        self.symbol_service = symbol_service
        self.logger = logger

    def default_quadrature(self) -> QuadratureSpec:
        return QuadratureSpec(
            panels=config.QUAD_MIN_PANELS,
            nodes_per_panel=config.QUAD_NODES_PER_PANEL,
            tolerance=config.QUAD_TOLERANCE,
        )

    def phase_table(self, state: FourierState, sym: PolynomialSymbol, seg: SegmentSpec) -> PhaseTable:
        ks = state.support
        if not ks:
            return PhaseTable(np.zeros(0, dtype=complex), np.zeros(0), Fraction(0))
        lambdas = [self.symbol_service.lambda_kv(sym, seg.v, k) for k in ks]
        reference = lambdas[0]
        amplitudes = np.array([
            state.coefficients[k] * np.exp(1j * (seg.t0.phase(self.symbol_service.eval_p(sym, k)) + seg.x0.phase(k)))
            for k in ks
        ], dtype=complex)
        frequencies = np.array([float(lam - reference) for lam in lambdas])
        return PhaseTable(amplitudes, frequencies, reference)

    def _sum(self, table: PhaseTable, times: np.ndarray) -> np.ndarray:
        if table.amplitudes.size == 0:
            return np.zeros(times.shape, dtype=complex)
        return np.exp(1j * np.outer(times, table.frequencies)) @ table.amplitudes

    def evaluate_many(self, state: FourierState, sym: PolynomialSymbol, seg: SegmentSpec, times: Sequence[float]) -> np.ndarray:
        """u(t0 + t, x0 - v t) for each t"""
        table = self.phase_table(state, sym, seg)
        times = np.asarray(times, dtype=float)
        reference = np.array([Quantity.from_float(float(t)).phase(table.reference) for t in times])
        return self._sum(table, times) * np.exp(1j * reference)

    def evaluate_on_segment(self, state: FourierState, sym: PolynomialSymbol, seg: SegmentSpec, t: float) -> complex:
        return complex(self.evaluate_many(state, sym, seg, [t])[0])

    def panels_for(self, table: PhaseTable, seg: SegmentSpec, quad: QuadratureSpec) -> int:
        """Enough panels for four per oscillation period of the fastest beat"""
        return max(quad.panels, math.ceil(seg.T * table.spread / (2 * math.pi)) * 4)

    def _composite(self, table: PhaseTable, length: float, panels: int, nodes_per_panel: int) -> float:
        nodes, weights = leggauss(nodes_per_panel)
        edges = np.linspace(0.0, length, panels + 1)
        half = np.diff(edges) / 2
        mids = (edges[:-1] + edges[1:]) / 2
        times = (mids[:, None] + half[:, None] * nodes[None, :]).ravel()
        scaled = (half[:, None] * weights[None, :]).ravel()
        values = self._sum(table, times)
        return float(np.sum(scaled * np.abs(values) ** 2))

    def segment_l2(self, state: FourierState, sym: PolynomialSymbol, seg: SegmentSpec, quad: Optional[QuadratureSpec] = None) -> float:
        """Composite Gauss-Legendre value of int_0^T |u(t0 + t, x0 - v t)|^2 dt, panels doubled until stable"""
        quad = quad or self.default_quadrature()
        table = self.phase_table(state, sym, seg)
        if table.amplitudes.size == 0:
            return 0.0
        panels = self.panels_for(table, seg, quad)
        value = self._composite(table, seg.T, panels, quad.nodes_per_panel)
        for _ in range(MAX_REFINEMENTS):
            panels *= 2
            finer = self._composite(table, seg.T, panels, quad.nodes_per_panel)
            if abs(finer - value) <= quad.tolerance * max(1.0, abs(finer)):
                return finer
            value = finer
        self.logger.warning(f"⚠️ segment_l2 not converged to {quad.tolerance:g} with {panels} panels")
        return value

    def l2_norm_sq(self, state: FourierState) -> float:
        return state.norm_sq()

    def frame_ratio(self, state: FourierState, sym: PolynomialSymbol, segs: Iterable[SegmentSpec], quad: Optional[QuadratureSpec] = None) -> float:
        """Observed energy over initial energy"""
        norm = self.l2_norm_sq(state)
        if norm == 0:
            raise InvalidInputError("frame ratio of the zero state is undefined")
        return math.fsum(self.segment_l2(state, sym, seg, quad) for seg in segs) / norm

    def unitarity_residual(self, state: FourierState, sym: PolynomialSymbol, t: float, x_samples: int) -> float:
        """|trapezoid of |u(t, .)|^2 over the circle - Parseval norm|"""
        needed = 2 * state.max_mode + 1
        if x_samples < needed:
            raise InvalidInputError(f"{x_samples} samples alias modes up to {state.max_mode}; need at least {needed}")
        time_q = Quantity.from_float(float(t))
        ks = np.array(state.support, dtype=np.int64)
        if ks.size == 0:
            return 0.0
        coeffs = np.array([
            state.coefficients[k] * np.exp(1j * time_q.phase(self.symbol_service.eval_p(sym, int(k))))
            for k in state.support
        ], dtype=complex)
        j = np.arange(x_samples, dtype=np.int64)
        # k * j mod N keeps the angle exact before scaling by 2pi/N
        angles = 2 * math.pi * (np.outer(j, ks) % x_samples) / x_samples
        values = np.exp(1j * angles) @ coeffs
        trapezoid = 2 * math.pi / x_samples * float(np.sum(np.abs(values) ** 2))
        return abs(trapezoid - self.l2_norm_sq(state))

    def two_mode_closed_form(self, state: FourierState, sym: PolynomialSymbol, seg: SegmentSpec) -> float:
        """Exact int_0^T |a1 e^{i l1 t} + a2 e^{i l2 t}|^2 dt for states with at most two modes"""
        if len(state.coefficients) > 2:
            raise InvalidInputError("closed form covers at most two modes")
        table = self.phase_table(state, sym, seg)
        if table.amplitudes.size == 0:
            return 0.0
        if table.amplitudes.size == 1:
            return seg.T * abs(table.amplitudes[0]) ** 2
        a1, a2 = table.amplitudes
        delta = float(table.frequencies[0] - table.frequencies[1])
        if delta == 0:
            return seg.T * abs(a1 + a2) ** 2
        cross = a1 * np.conj(a2) * (np.exp(1j * delta * seg.T) - 1) / (1j * delta)
        return float((abs(a1) ** 2 + abs(a2) ** 2) * seg.T + 2 * cross.real)

    def segment_trace(self, state: FourierState, sym: PolynomialSymbol, seg: SegmentSpec, samples: int) -> List[Tuple[float, float, float, float]]:
        """Rows (t, Re u, Im u, |u|^2) at evenly spaced times"""
        times = np.linspace(0.0, seg.T, samples)
        values = self.evaluate_many(state, sym, seg, times)
        return [(float(t), float(z.real), float(z.imag), float(abs(z) ** 2)) for t, z in zip(times, values)]

    def max_modulus(self, state: FourierState, sym: PolynomialSymbol, seg: SegmentSpec, samples: int) -> float:
        table = self.phase_table(state, sym, seg)
        times = np.linspace(0.0, seg.T, samples)
        return float(np.max(np.abs(self._sum(table, times)), initial=0.0))

    def direct_constant(self, states: Iterable[FourierState], sym: PolynomialSymbol, seg: SegmentSpec, quad: Optional[QuadratureSpec] = None) -> float:
        """Largest observed segment_l2 / l2_norm_sq over the given states"""
        ratios = [self.segment_l2(state, sym, seg, quad) / self.l2_norm_sq(state) for state in states if state.coefficients]
        constant = max(ratios, default=0.0)
        self.logger.debug(f"📈 direct constant over {len(ratios)} states: {constant:.6g}")
        return constant
