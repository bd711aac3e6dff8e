"""
Explicit counterexamples: states that vanish on observation segments, and
state sequences whose observed energy stays bounded while their norm grows
"""

import math
import time
from typing import List, Sequence, Tuple

import numpy as np

from ..config.config import config
from ..models import (
    ColoredGraph,
    CycleWitness,
    FourierState,
    PolynomialSymbol,
    QuadratureSpec,
    Quantity,
    RatioRow,
    ResidualReport,
    SegmentSpec,
    Slope,
)
from ..utils.errors import InvalidInputError
from ..utils.logger import get_logger

logger = get_logger("witness_service")


class WitnessService:
    """Vanishing states from resonant pairs and alternative cycles, ratio sequences from paths"""

    def __init__(self, symbol_service=None, graph_service=None, numeric_service=None):
        self.symbol_service = symbol_service
        self.graph_service = graph_service
        self.numeric_service = numeric_service
        self.logger = logger

    def intersection_point(self, seg1: SegmentSpec, seg2: SegmentSpec) -> Tuple[Quantity, Quantity]:
        """Common point of the two lines x + v t = x_i + v_i t_i; x0 reduced into [0, 2pi)"""
        if seg1.v == seg2.v:
            raise InvalidInputError(f"parallel segments (v = {seg1.v}) do not meet")
        level1 = seg1.x0 + seg1.t0.scaled(seg1.v)
        level2 = seg2.x0 + seg2.t0.scaled(seg2.v)
        inverse = 1 / (seg1.v - seg2.v)
        t0 = (level1 - level2).scaled(inverse)
        x0 = (level2.scaled(seg1.v) - level1.scaled(seg2.v)).scaled(inverse)
        return t0, x0.wrapped()

    def _phase(self, sym: PolynomialSymbol, k: int, t0: Quantity, x0: Quantity) -> complex:
        """e^{-i(p(k) t0 + k x0)}"""
        angle = t0.phase(self.symbol_service.eval_p(sym, k)) + x0.phase(k)
        return complex(np.exp(-1j * angle))

    def cycle_vanishing_state(self, sym: PolynomialSymbol, cycle: CycleWitness, t0: Quantity, x0: Quantity) -> FourierState:
        """Alternating signs around the cycle cancel on both segments through (t0, x0)"""
        self.graph_service.validate_cycle(sym, cycle)
        coefficients = {
            k: (1 if j % 2 == 0 else -1) * self._phase(sym, k, t0, x0)
            for j, k in enumerate(cycle.vertices)
        }
        return FourierState(coefficients=coefficients)

    def pair_vanishing_state(self, sym: PolynomialSymbol, v: Slope, t0: Quantity, x0: Quantity, pair: Tuple[int, int]) -> FourierState:
        """Two equal-frequency modes with opposite signs"""
        k1, k2 = pair
        if k1 == k2 or self.symbol_service.divided_diff(sym, v, k1, k2) != 0:
            raise InvalidInputError(f"{{{k1}, {k2}}} is not a resonant pair for v = {v}")
        return FourierState(coefficients={
            k1: self._phase(sym, k1, t0, x0),
            k2: -self._phase(sym, k2, t0, x0),
        })

    def ratio_sequence(self, sym: PolynomialSymbol, graph: ColoredGraph, segs: Tuple[SegmentSpec, SegmentSpec], n_list: Sequence[int], quad: QuadratureSpec = None) -> List[RatioRow]:
        """Observed energy against Parseval norm along alternative paths of growing length"""
        start_time = time.time()
        first, second = segs
        if graph.provenance is not None and (first.v, second.v) != (graph.provenance.v1, graph.provenance.v2):
            raise InvalidInputError("segment slopes must match the graph's red and blue slopes")
        t0, x0 = self.intersection_point(first, second)

        rows = []
        for n in n_list:
            path = self.graph_service.find_alternative_path(graph, n)
            self.graph_service.validate_path(sym, path)
            state = FourierState(coefficients={
                k: (-1 if j % 2 == 0 else 1) * self._phase(sym, k, t0, x0)
                for j, k in enumerate(path.vertices)
            })
            norm_sq = 4 * math.pi * n
            on_first = self.numeric_service.segment_l2(state, sym, first, quad)
            on_second = self.numeric_service.segment_l2(state, sym, second, quad)
            seg_integral = on_first + on_second
            rows.append(RatioRow(
                n=n,
                norm_sq=norm_sq,
                seg_integral=seg_integral,
                ratio=seg_integral / norm_sq,
                first_segment=on_first,
                second_segment=on_second,
            ))
            self.logger.debug(f"📉 n={n}: seg_integral={seg_integral:.6g} ratio={seg_integral / norm_sq:.6g}")

        self.logger.info(f"✅ ratio_sequence over n={list(n_list)} in {time.time() - start_time:.3f}s")
        return rows

    def segment_residual(self, state: FourierState, sym: PolynomialSymbol, seg: SegmentSpec, samples: int = None) -> float:
        samples = samples or config.RESIDUAL_SAMPLES
        return self.numeric_service.max_modulus(state, sym, seg, samples)

    def verify_vanishing(self, state: FourierState, sym: PolynomialSymbol, segs: Sequence[SegmentSpec], samples: int = None) -> ResidualReport:
        samples = samples or config.RESIDUAL_SAMPLES
        residuals = tuple(self.segment_residual(state, sym, seg, samples) for seg in segs)
        report = ResidualReport(residuals=residuals, samples=samples, norm_sq=state.norm_sq())
        if report.max_residual >= config.RESIDUAL_TOLERANCE:
            self.logger.warning(f"⚠️ residual {report.max_residual:.3g} exceeds {config.RESIDUAL_TOLERANCE:g}")
        return report
