"""
Exact arithmetic on polynomial dispersion symbols
"""

from fractions import Fraction
from typing import Optional

from ..models import GapClass, GapTag, PolynomialSymbol, Quantity, Slope
from ..utils.errors import DegenerateGapError, InvalidInputError
from ..utils.integer_roots import horner
from ..utils.logger import get_logger
from ..utils.parsing import parse_rational

logger = get_logger("symbol_service")

PRESETS = {
    "schrodinger": "k^2",
    "kdv": "k^3",
    "higher-schrodinger:l": "k^2 + k^4 + ... + k^(2l), l >= 2",
}


def higher_schrodinger_coeffs(l: int):
    if l < 2:
        raise InvalidInputError(f"higher-order Schrodinger needs l >= 2, got {l}")
    coeffs = [0] * (2 * l + 1)
    for power in range(2, 2 * l + 1, 2):
        coeffs[power] = 1
    return coeffs


class SymbolService:
    """Evaluation, eigenvalues along lines, divided differences and gap classes"""

    def __init__(self):
        self.logger = logger

    def parse_symbol(self, text: str) -> PolynomialSymbol:
        """Parse 'a0,a1,...,ad' or a preset name"""
        spec = text.strip().lower()
        if spec == "schrodinger":
            return PolynomialSymbol(coeffs=(0, 0, 1))
        if spec == "kdv":
            return PolynomialSymbol(coeffs=(0, 0, 0, 1))
        if spec.startswith("higher-schrodinger"):
            _, _, order = spec.partition(":")
            if not order.strip().isdigit():
                raise InvalidInputError(f"Expected 'higher-schrodinger:l', got {text!r}")
            return PolynomialSymbol(coeffs=tuple(higher_schrodinger_coeffs(int(order))))

        try:
            coeffs = tuple(parse_rational(part) for part in spec.split(","))
            return PolynomialSymbol(coeffs=coeffs)
        except (InvalidInputError, ValueError) as e:
            self.logger.error(f"Malformed symbol {text!r}: {e}")
            raise InvalidInputError(f"Malformed symbol {text!r}; use 'a0,a1,...,ad' or one of {sorted(PRESETS)}") from e

    def parse_slope(self, text) -> Slope:
        return parse_rational(text)

    def eval_p(self, sym: PolynomialSymbol, k: int) -> Fraction:
        return Fraction(horner(sym.coeffs, k))

    def lambda_kv(self, sym: PolynomialSymbol, v: Slope, k: int) -> Fraction:
        return self.eval_p(sym, k) - k * v

    def divided_diff(self, sym: PolynomialSymbol, v: Slope, k: int, m: int) -> Fraction:
        """h(k, m) = (p(k) - p(m)) / (k - m) - v; zero exactly when k and m resonate"""
        if k == m:
            raise InvalidInputError(f"divided difference needs k != m, got k = m = {k}")
        return (self.eval_p(sym, k) - self.eval_p(sym, m)) / (k - m) - v

    def gap_classification(self, sym: PolynomialSymbol, v: Slope) -> GapClass:
        if sym.degree >= 2:
            return GapClass(tag=GapTag.INFINITE)
        a1 = sym.coeffs[1]
        if a1 == v:
            return GapClass(tag=GapTag.DEGENERATE)
        return GapClass(tag=GapTag.POSITIVE, value=abs(a1 - v))

    def min_time(self, sym: PolynomialSymbol, v: Slope) -> Quantity:
        """Observation-time threshold 2pi/gamma'; zero means any T > 0 works"""
        gap = self.gap_classification(sym, v)
        if gap.tag is GapTag.DEGENERATE:
            raise DegenerateGapError(f"no uniform gap for p = {sym} at v = {v}")
        if gap.tag is GapTag.INFINITE:
            return Quantity()
        return Quantity(coefficient=2 / gap.value, pi_multiple=True)

    def uniform_gap_window(self, sym: PolynomialSymbol, v: Slope, window: int) -> Optional[Fraction]:
        """Smallest distance between distinct lambda values with |k| <= window"""
        values = sorted({self.lambda_kv(sym, v, k) for k in range(-window, window + 1)})
        gaps = [b - a for a, b in zip(values, values[1:])]
        return min(gaps) if gaps else None

    def describe(self, sym: PolynomialSymbol) -> str:
        return f"p(k) = {sym}"

