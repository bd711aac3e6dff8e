"""
One- and two-segment observability verdicts
"""

import threading
import time
from typing import Optional, Tuple

from ..config.config import config
from ..models import (
    GapTag,
    Hypotheses,
    ObservabilityVerdict,
    PolynomialSymbol,
    Quantity,
    ResonancePairSet,
    Slope,
    VerdictReason,
)
from ..utils.errors import ConsistencyError, InvalidInputError
from ..utils.logger import get_logger

logger = get_logger("decision_service")


class DecisionService:
    """Turns resonance sets and graph queries into verdicts with witnesses"""

    def __init__(self, symbol_service=None, diophantine_service=None, graph_service=None):
        self.symbol_service = symbol_service
        self.diophantine_service = diophantine_service
        self.graph_service = graph_service
        self.logger = logger
        self._hypotheses = {}
        self._hypotheses_lock = threading.Lock()

    def check_hypotheses(self, sym: PolynomialSymbol, v: Slope) -> Hypotheses:
        """Every class is finite, and classes beyond N_v have at most two members"""
        key = (sym, v)
        with self._hypotheses_lock:
            cached = self._hypotheses.get(key)
        if cached is not None:
            return cached
        computed = self._check_hypotheses(sym, v)
        # sweep workers share this cache; the first stored result wins
        with self._hypotheses_lock:
            return self._hypotheses.setdefault(key, computed)

    def _check_hypotheses(self, sym: PolynomialSymbol, v: Slope) -> Hypotheses:
        gap = self.symbol_service.gap_classification(sym, v)
        if gap.tag is GapTag.DEGENERATE:
            return Hypotheses(h1=False, h2=False, n_v=None)
        if sym.degree < 2:
            return Hypotheses(h1=True, h2=True, n_v=1)

        pairs = self.diophantine_service.pi_set(sym, v)
        finite = pairs.finite_vertices()
        n_v = 1 + max((abs(k) for k in finite), default=0)

        probes = list(finite) + list(range(n_v, n_v + config.DEFAULT_WINDOW))
        sizes = self.diophantine_service.class_sizes(sym, v, probes)
        h1 = all(size <= sym.degree for size in sizes.values())
        h2 = all(sizes[k] <= 2 for k in range(n_v, n_v + config.DEFAULT_WINDOW))
        return Hypotheses(h1=h1, h2=h2, n_v=n_v)

    @staticmethod
    def pick_pair(pairs: ResonancePairSet) -> Optional[Tuple[int, int]]:
        """Resonant pair anchored at the vertex of smallest |k|"""
        candidates = []
        for a, b in pairs.finite_pairs:
            candidates += [(a, b), (b, a)]
        for s in pairs.infinite_families:
            anchor = 0 if s != 0 else -1
            candidates.append((anchor, s - anchor))
        if not candidates:
            return None
        a, b = min(candidates, key=lambda p: (abs(p[0]), p[0], abs(p[1]), p[1]))
        return (a, b) if a < b else (b, a)

    def _min_time(self, sym: PolynomialSymbol, *slopes: Slope) -> Quantity:
        thresholds = [self.symbol_service.min_time(sym, v) for v in slopes]
        return max(thresholds, key=float)

    def decide_one_segment(self, sym: PolynomialSymbol, v: Slope) -> ObservabilityVerdict:
        """Observable from one segment iff Pi(v) is empty"""
        hypotheses = self.check_hypotheses(sym, v)
        if self.symbol_service.gap_classification(sym, v).tag is GapTag.DEGENERATE:
            self.logger.warning(f"⚠️ degenerate gap for p={sym} v={v}; no decision")
            return ObservabilityVerdict(
                symbol=sym, slopes=(v,), qualitative=None, quantitative=None,
                reason=VerdictReason.GAMMA_DEGENERATE, hypotheses=(hypotheses,),
            )

        min_time = self._min_time(sym, v)
        if sym.degree < 2:
            return ObservabilityVerdict(
                symbol=sym, slopes=(v,), qualitative=True, quantitative=True,
                reason=VerdictReason.EMPTY_PI, min_time=min_time, hypotheses=(hypotheses,),
            )

        pairs = self.diophantine_service.pi_set(sym, v)
        if pairs.is_empty():
            return ObservabilityVerdict(
                symbol=sym, slopes=(v,), qualitative=True, quantitative=True,
                reason=VerdictReason.EMPTY_PI, min_time=min_time, hypotheses=(hypotheses,),
            )
        return ObservabilityVerdict(
            symbol=sym, slopes=(v,), qualitative=False, quantitative=False,
            reason=VerdictReason.RESONANT_PAIR, resonant_pair=self.pick_pair(pairs),
            min_time=min_time, hypotheses=(hypotheses,),
        )

    def decide_two_segments(self, sym: PolynomialSymbol, v1: Slope, v2: Slope) -> ObservabilityVerdict:
        """No two-colored cycle gives qualitative; add finite g for quantitative"""
        if v1 == v2:
            raise InvalidInputError(f"slopes must differ, got v1 = v2 = {v1}")
        if sym.degree < 2:
            raise InvalidInputError(f"two-segment decisions need degree >= 2, got degree {sym.degree}")
        start_time = time.time()

        graph = self.graph_service.build_graph(sym, v1, v2, config.DEFAULT_WINDOW)
        has_cycle, cycle = self.graph_service.has_two_colored_cycle(graph)
        summary = self.graph_service.component_summary(graph)
        qualitative = not has_cycle
        quantitative = qualitative and summary.g_finite

        if sym.degree > 2 and qualitative != quantitative:
            self.logger.error(f"❌ qualitative/quantitative mismatch for p={sym} v1={v1} v2={v2}")
            raise ConsistencyError(
                f"degree {sym.degree} symbol gave qualitative={qualitative} but quantitative={quantitative}"
            )

        path = None
        if has_cycle:
            reason = VerdictReason.TWO_COLORED_CYCLE
            self.graph_service.validate_cycle(sym, cycle)
        elif not summary.g_finite:
            reason = VerdictReason.INFINITE_G
            path = self.graph_service.find_alternative_path(graph, config.PATH_WITNESS_PAIRS)
            self.graph_service.validate_path(sym, path)
        else:
            empty = [self.diophantine_service.pi_set(sym, v).is_empty() for v in (v1, v2)]
            if all(empty):
                reason = VerdictReason.EMPTY_PI
            elif any(empty):
                reason = VerdictReason.NO_CYCLE
            else:
                reason = VerdictReason.NO_CYCLE_FINITE_G

        verdict = ObservabilityVerdict(
            symbol=sym,
            slopes=(v1, v2),
            qualitative=qualitative,
            quantitative=quantitative,
            reason=reason,
            cycle_witness=cycle,
            path_witness=path,
            summary=summary,
            min_time=self._min_time(sym, v1, v2),
            hypotheses=(self.check_hypotheses(sym, v1), self.check_hypotheses(sym, v2)),
        )
        self.logger.debug(
            f"⚖️ decide_two_segments p={sym} v1={v1} v2={v2}: {reason.value} in {time.time() - start_time:.3f}s"
        )
        return verdict

    def validate_verdict(self, sym: PolynomialSymbol, verdict: ObservabilityVerdict) -> bool:
        """Recompute every claimed resonance of a verdict"""
        if verdict.quantitative and not verdict.qualitative:
            raise ConsistencyError("quantitative observability without qualitative observability")
        if verdict.reason is VerdictReason.TWO_COLORED_CYCLE and verdict.cycle_witness is None:
            raise ConsistencyError("two-colored cycle verdict carries no cycle")
        if verdict.reason is VerdictReason.INFINITE_G and verdict.path_witness is None:
            raise ConsistencyError("infinite g verdict carries no path")
        if verdict.cycle_witness is not None:
            self.graph_service.validate_cycle(sym, verdict.cycle_witness)
        if verdict.path_witness is not None:
            self.graph_service.validate_path(sym, verdict.path_witness)
        if verdict.resonant_pair is not None:
            k, m = verdict.resonant_pair
            if self.symbol_service.divided_diff(sym, verdict.slopes[0], k, m) != 0:
                raise ConsistencyError(f"{{{k}, {m}}} does not resonate under v = {verdict.slopes[0]}")
        return True
