"""
Exact resonance classes Xi_k(v) and resonant sets Pi(v).

h(k, m) = (p(k) - p(m)) / (k - m) - v splits into homogeneous parts. The top
part of an odd-degree symbol is bounded below by c1 (k^2 + m^2)^n, which
confines every solution to a disk. For even degree the top part factors as
a_d (k + m) P(k, m) with P >= c1 (k^2 + m^2)^(n-1), which confines k + m to a
band; each sum s in the band is then a one-variable problem.
"""

import math
import time
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Sequence, Set, Tuple

from ..config.config import config
from ..models import PolynomialSymbol, ResonanceClass, ResonancePairSet, Slope
from ..utils.errors import DegenerateGapError, InvalidInputError
from ..utils.integer_roots import horner, integer_roots, reflect, trim
from ..utils.logger import get_logger

logger = get_logger("diophantine_service")

Pair = Tuple[int, int]


def lower_product_constant(angles: Sequence[float]) -> Fraction:
    """prod (1 - |cos theta|), rounded down to a rational"""
    scale = 10 ** config.GAP_CONSTANT_DIGITS
    value = math.prod(1 - abs(math.cos(theta)) for theta in angles)
    return Fraction(max(math.floor(value * scale) - 1, 1), scale)


def _lower_weights(coeffs: Sequence[Fraction], v: Fraction, top: int) -> List[Fraction]:
    """w_e bounding the degree-e homogeneous part of h by w_e R^e, for e < top"""
    weights = [abs(coeffs[1] - v)]
    for e in range(1, top):
        weights.append(abs(coeffs[e + 1]) * (e + 1))
    return weights


def disk_radius(coeffs: Sequence[Fraction], v: Fraction) -> int:
    """Odd degree 2n+1: no resonant pair has k^2 + m^2 >= radius^2"""
    d = len(coeffs) - 1
    n = (d - 1) // 2
    c1 = lower_product_constant([2 * math.pi * j / d for j in range(1, n + 1)])
    top = abs(coeffs[-1]) * c1
    weights = _lower_weights(coeffs, v, 2 * n)

    def dominates(r: int) -> bool:
        # A r^2n - sum w_e r^e has one sign change, so once positive it stays positive
        return top * r ** (2 * n) > sum(w * r ** e for e, w in enumerate(weights))

    hi = 1
    while not dominates(hi):
        hi *= 2
    lo = hi // 2
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if dominates(mid):
            hi = mid
        else:
            lo = mid
    return hi


def sum_band(coeffs: Sequence[Fraction], v: Fraction) -> int:
    """Even degree 2n: every resonant pair has |k + m| <= band"""
    d = len(coeffs) - 1
    n = d // 2
    c1 = lower_product_constant([math.pi * j / n for j in range(1, n)])
    total = sum(_lower_weights(coeffs, v, 2 * n - 1))
    return math.floor(total / (abs(coeffs[-1]) * c1))


def _row_in_m(coeffs: Sequence[Fraction], v: Fraction, k: int) -> List[Fraction]:
    """Coefficients in m of h(k, m) for a fixed k"""
    d = len(coeffs) - 1
    row = []
    for e in range(d):
        row.append(sum(coeffs[j] * k ** (j - 1 - e) for j in range(e + 1, d + 1)))
    row[0] -= v
    return row


@lru_cache(maxsize=4096)
def solve_resonances(coeffs: Tuple[Fraction, ...], v: Fraction) -> Tuple[Tuple[Pair, ...], Tuple[int, ...]]:
    """(finite pairs, family sums) of Pi(v); cached per (symbol, slope)"""
    d = len(coeffs) - 1
    pairs: Set[Pair] = set()
    families: List[int] = []

    if d % 2:
        radius = disk_radius(coeffs, v)
        for k in range(-radius + 1, radius):
            span = math.isqrt(max(radius * radius - k * k - 1, 0))
            for m in integer_roots(_row_in_m(coeffs, v, k), bound=span):
                if m != k:
                    pairs.add((min(k, m), max(k, m)))
    else:
        band = sum_band(coeffs, v)
        for s in range(-band, band + 1):
            q = [a - b for a, b in zip(coeffs, reflect(coeffs, s))]
            q[0] += v * s
            q[1] -= 2 * v
            if not trim(q):
                families.append(s)
                continue
            for k in integer_roots(q):
                if 2 * k != s:
                    pairs.add((min(k, s - k), max(k, s - k)))

    return tuple(sorted(pairs)), tuple(families)


class DiophantineService:
    """Resonance classes and resonant sets, exact and complete"""

    def __init__(self, symbol_service=None):
        self.symbol_service = symbol_service
        self.logger = logger

    def xi_class(self, sym: PolynomialSymbol, v: Slope, k: int) -> ResonanceClass:
        """All m with lambda_m(v) = lambda_k(v)"""
        level = self.symbol_service.lambda_kv(sym, v, k)
        poly = list(sym.coeffs) + [Fraction(0)] * max(0, 2 - len(sym.coeffs))
        poly[1] -= v
        poly[0] -= level
        if not trim(poly):
            raise DegenerateGapError(f"every mode resonates for p = {sym} at v = {v}")
        members = integer_roots(poly)
        return ResonanceClass(anchor=k, members=tuple(members))

    def is_resonant(self, sym: PolynomialSymbol, v: Slope, k: int) -> bool:
        return self.xi_class(sym, v, k).size >= 2

    def pi_set(self, sym: PolynomialSymbol, v: Slope) -> ResonancePairSet:
        """Complete Pi(v): explicit pairs plus symbolic families"""
        if sym.degree < 2:
            raise InvalidInputError(f"resonant sets need degree >= 2, got degree {sym.degree}")
        start_time = time.time()
        finite_pairs, families = solve_resonances(tuple(sym.coeffs), Fraction(v))
        self.logger.debug(
            f"🔢 pi_set p={sym} v={v}: {len(finite_pairs)} pairs, families {list(families)} "
            f"in {time.time() - start_time:.3f}s"
        )
        return ResonancePairSet(
            symbol=sym,
            slope=v,
            finite_pairs=finite_pairs,
            infinite_families=families,
        )

    def pi_oracle(self, sym: PolynomialSymbol, v: Slope, window: int) -> Set[Pair]:
        """Exhaustive scan of |k|, |m| <= window, grouped by lambda value"""
        if window < 1:
            raise InvalidInputError(f"oracle window must be >= 1, got {window}")
        levels: Dict[Fraction, List[int]] = defaultdict(list)
        for k in range(-window, window + 1):
            levels[self.symbol_service.lambda_kv(sym, v, k)].append(k)
        pairs = set()
        for members in levels.values():
            pairs.update(combinations(sorted(members), 2))
        return pairs

    def resonance_bound(self, sym: PolynomialSymbol, v: Slope) -> Dict[str, int]:
        if sym.degree < 2:
            raise InvalidInputError(f"resonant sets need degree >= 2, got degree {sym.degree}")
        coeffs = tuple(sym.coeffs)
        if sym.degree % 2:
            return {"disk_radius": disk_radius(coeffs, Fraction(v))}
        return {"sum_band": sum_band(coeffs, Fraction(v))}

    def class_sizes(self, sym: PolynomialSymbol, v: Slope, ks: Sequence[int]) -> Dict[int, int]:
        """n_k(v) for each k"""
        return {k: self.xi_class(sym, v, k).size for k in ks}

    def evaluate_row(self, sym: PolynomialSymbol, v: Slope, k: int, m: int) -> Fraction:
        """h(k, m) through the per-k row used by the solver"""
        return horner(_row_in_m(tuple(sym.coeffs), Fraction(v), k), m)
