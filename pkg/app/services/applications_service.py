"""
Closed-form and number-theoretic fast paths for the Schrodinger,
higher-order Schrodinger and linear KdV symbols
"""

import math
import time
from fractions import Fraction
from typing import List, Optional, Tuple

from sympy import factorint, isprime

from ..config.config import config
from ..models import (
    CriterionOutcome,
    CycleWitness,
    GammaCertificate,
    KdvCriterionResult,
    ObservabilityVerdict,
    PolynomialSymbol,
    Slope,
    VerdictReason,
)
from ..utils.errors import ConsistencyError, InvalidInputError
from ..utils.logger import get_logger
from .symbol_service import higher_schrodinger_coeffs

logger = get_logger("applications_service")

SCHRODINGER = PolynomialSymbol(coeffs=(0, 0, 1))
KDV = PolynomialSymbol(coeffs=(0, 0, 0, 1))


def _is_integer(v: Slope) -> bool:
    return Fraction(v).denominator == 1


class ApplicationsService:
    """Verdicts for the worked example symbols, cross-checked against the general decision"""

    def __init__(self, symbol_service=None, graph_service=None, decision_service=None):
        self.symbol_service = symbol_service
        self.graph_service = graph_service
        self.decision_service = decision_service
        self.logger = logger

    # Schrodinger

    def schrodinger_verdict(self, v1: Slope, v2: Slope) -> ObservabilityVerdict:
        """Pi(v) is Z for integer v and empty otherwise"""
        if v1 == v2:
            raise InvalidInputError(f"slopes must differ, got v1 = v2 = {v1}")
        integers = [_is_integer(v) for v in (v1, v2)]
        hypotheses = (
            self.decision_service.check_hypotheses(SCHRODINGER, v1),
            self.decision_service.check_hypotheses(SCHRODINGER, v2),
        )
        common = dict(symbol=SCHRODINGER, slopes=(v1, v2), min_time=self.symbol_service.min_time(SCHRODINGER, v1), hypotheses=hypotheses)

        if all(integers):
            graph = self.graph_service.build_graph(SCHRODINGER, v1, v2)
            path = self.graph_service.find_alternative_path(graph, config.PATH_WITNESS_PAIRS)
            self.graph_service.validate_path(SCHRODINGER, path)
            return ObservabilityVerdict(
                qualitative=True, quantitative=False, reason=VerdictReason.INFINITE_G, path_witness=path, **common
            )
        reason = VerdictReason.NO_CYCLE if any(integers) else VerdictReason.EMPTY_PI
        return ObservabilityVerdict(qualitative=True, quantitative=True, reason=reason, **common)

    # Higher-order Schrodinger

    def higher_schrodinger_symbol(self, l: int) -> PolynomialSymbol:
        """k^2 + k^4 + ... + k^(2l)"""
        return PolynomialSymbol(coeffs=tuple(higher_schrodinger_coeffs(l)))

    def higher_schrodinger_verdict(self, l: int, v1: Slope, v2: Slope) -> ObservabilityVerdict:
        """Always yes/yes; the general decision must agree"""
        sym = self.higher_schrodinger_symbol(l)
        verdict = self.decision_service.decide_two_segments(sym, v1, v2)
        if not (verdict.qualitative and verdict.quantitative):
            self.logger.error(f"❌ higher-order Schrodinger l={l} v1={v1} v2={v2} decided {verdict.reason.value}")
            raise ConsistencyError(f"expected yes/yes for l={l}, v1={v1}, v2={v2}; got {verdict.reason.value}")
        return verdict

    # KdV

    def gamma_membership(self, v: int) -> GammaCertificate:
        """Is v = k^2 + km + m^2 with k != m; smallest |k| + |m| first, then larger k"""
        if v <= 0:
            return GammaCertificate(v=v, member=False)
        bound = math.isqrt(4 * v // 3 + 1) + 2
        best: Optional[Tuple[int, int]] = None
        for k in range(-bound, bound + 1):
            # m^2 + k m + (k^2 - v) = 0
            disc = 4 * v - 3 * k * k
            if disc < 0:
                continue
            root = math.isqrt(disc)
            if root * root != disc:
                continue
            for twice_m in (-k + root, -k - root):
                if twice_m % 2:
                    continue
                m = twice_m // 2
                if m >= k:
                    continue
                key = (abs(k) + abs(m), -k)
                if best is None or key < (abs(best[0]) + abs(best[1]), -best[0]):
                    best = (k, m)
        if best is None:
            return GammaCertificate(v=v, member=False)
        k, m = best
        if k * k + k * m + m * m != v:
            raise ConsistencyError(f"representation {best} does not give {v}")
        return GammaCertificate(v=v, member=True, representation=best)

    def gamma_members(self, limit: int) -> List[int]:
        return [v for v in range(1, limit + 1) if self.gamma_membership(v).member]

    def kdv_one_segment(self, v: Slope) -> ObservabilityVerdict:
        """Unobservable exactly when v lies in Gamma"""
        hypotheses = (self.decision_service.check_hypotheses(KDV, v),)
        common = dict(symbol=KDV, slopes=(v,), min_time=self.symbol_service.min_time(KDV, v), hypotheses=hypotheses)
        certificate = self.gamma_membership(int(v)) if _is_integer(v) else None
        if certificate is None or not certificate.member:
            return ObservabilityVerdict(qualitative=True, quantitative=True, reason=VerdictReason.EMPTY_PI, **common)

        k, m = certificate.representation
        if self.symbol_service.divided_diff(KDV, v, k, m) != 0:
            raise ConsistencyError(f"Gamma representation {(k, m)} is not resonant for v = {v}")
        return ObservabilityVerdict(
            qualitative=False, quantitative=False, reason=VerdictReason.RESONANT_PAIR,
            resonant_pair=(k, m), **common,
        )

    def ord_p(self, v: int, p: int) -> int:
        """Largest e with p^e dividing v"""
        if v == 0:
            raise InvalidInputError("ord_p(0) is undefined")
        if not isprime(p):
            raise InvalidInputError(f"{p} is not prime")
        v, e = abs(v), 0
        while v % p == 0:
            v //= p
            e += 1
        return e

    def kdv_two_segment_criterion(self, v1: int, v2: int) -> KdvCriterionResult:
        """Sufficient conditions: max > 4 min > 0, or differing ord_p at a prime p = 2 mod 3"""
        if v1 == v2:
            raise InvalidInputError(f"slopes must differ, got v1 = v2 = {v1}")
        if max(abs(v1), abs(v2)) > config.MAX_TRIAL_DIVISION:
            raise InvalidInputError(f"slopes above {config.MAX_TRIAL_DIVISION} are out of range")
        start_time = time.time()
        certificates = (self.gamma_membership(v1), self.gamma_membership(v2))

        table = {}
        if v1 > 0 and v2 > 0:
            for p in sorted(factorint(v1 * v2)):
                if p % 3 == 2:
                    table[p] = (self.ord_p(v1, p), self.ord_p(v2, p))
        else:
            self.logger.warning(f"⚠️ non-positive slope in ({v1}, {v2}); only the graph decision applies")

        low, high = sorted((v1, v2))
        outcome, prime, valuations, fallback = CriterionOutcome.INCONCLUSIVE, None, None, None
        if low > 0 and high > 4 * low:
            outcome = CriterionOutcome.OBSERVABLE_BY_1
        else:
            for p, (e1, e2) in table.items():
                if e1 != e2:
                    outcome, prime, valuations = CriterionOutcome.OBSERVABLE_BY_2, p, (e1, e2)
                    break
        if outcome is CriterionOutcome.INCONCLUSIVE:
            fallback = self.decision_service.decide_two_segments(KDV, Fraction(v1), Fraction(v2))

        self.logger.debug(f"🔎 KdV criterion ({v1}, {v2}): {outcome.value} in {time.time() - start_time:.3f}s")
        return KdvCriterionResult(
            v1=v1,
            v2=v2,
            outcome=outcome,
            prime=prime,
            valuations=valuations,
            valuation_table=table,
            certificates=certificates,
            fallback=fallback,
        )

    def find_kdv_cycles(self, limit: int) -> List[Tuple[int, int, CycleWitness]]:
        """Every pair v1 < v2 in Gamma up to limit whose graph holds a two-colored cycle"""
        members = self.gamma_members(limit)
        found = []
        for i, v1 in enumerate(members):
            for v2 in members[i + 1:]:
                graph = self.graph_service.build_graph(KDV, Fraction(v1), Fraction(v2))
                has_cycle, cycle = self.graph_service.has_two_colored_cycle(graph)
                if has_cycle:
                    found.append((v1, v2, cycle))
        self.logger.info(f"🔍 {len(found)} KdV slope pairs with two-colored cycles up to {limit}")
        return found
