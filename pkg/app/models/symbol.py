import math
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

import sympy
from pydantic import field_validator

from .base import FrozenModel, Rational
from ..utils.parsing import parse_quantity

Slope = Fraction

# 60 significant digits of pi as an exact rational
PI_RATIONAL = Fraction(str(sympy.N(sympy.pi, 60)))
TWO_PI_RATIONAL = 2 * PI_RATIONAL


class PolynomialSymbol(FrozenModel):
    """Dispersion symbol p(k) = sum a_j k^j with exact rational coefficients"""
    coeffs: Tuple[Rational, ...]

    @field_validator("coeffs")
    @classmethod
    def _strip_leading_zeros(cls, coeffs):
        trimmed = list(coeffs)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        if len(trimmed) < 2:
            raise ValueError("symbol must have degree >= 1")
        return tuple(trimmed)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1]

    def __str__(self) -> str:
        terms = []
        for power, a in enumerate(self.coeffs):
            if a == 0:
                continue
            if power == 0:
                terms.append(str(a))
            else:
                mono = "k" if power == 1 else f"k^{power}"
                terms.append(mono if a == 1 else f"{a}*{mono}")
        return " + ".join(terms) if terms else "0"


class GapTag(str, Enum):
    INFINITE = "infinite"
    POSITIVE = "positive"
    DEGENERATE = "degenerate"


class GapClass(FrozenModel):
    tag: GapTag
    value: Optional[Rational] = None


class Quantity(FrozenModel):
    """A time or angle kept exact as coefficient or coefficient * pi"""
    coefficient: Rational = Fraction(0)
    pi_multiple: bool = False

    @classmethod
    def parse(cls, text) -> "Quantity":
        if isinstance(text, Quantity):
            return text
        coefficient, pi_multiple = parse_quantity(text)
        return cls(coefficient=coefficient, pi_multiple=pi_multiple)

    @classmethod
    def from_float(cls, value: float) -> "Quantity":
        return cls(coefficient=Fraction(value))

    def __float__(self) -> float:
        if self.pi_multiple:
            return float(self.coefficient) * math.pi
        return float(self.coefficient)

    def __str__(self) -> str:
        if not self.pi_multiple:
            return str(self.coefficient)
        if self.coefficient == 0:
            return "0"
        return f"{self.coefficient}pi"

    def is_zero(self) -> bool:
        return self.coefficient == 0

    def _combine(self, other: "Quantity", sign: int) -> "Quantity":
        if other.is_zero():
            return self
        if self.is_zero():
            return other.scaled(sign)
        if self.pi_multiple == other.pi_multiple:
            return Quantity(coefficient=self.coefficient + sign * other.coefficient, pi_multiple=self.pi_multiple)
        return Quantity.from_float(float(self) + sign * float(other))

    def __add__(self, other: "Quantity") -> "Quantity":
        return self._combine(other, 1)

    def __sub__(self, other: "Quantity") -> "Quantity":
        return self._combine(other, -1)

    def scaled(self, factor) -> "Quantity":
        return Quantity(coefficient=self.coefficient * Fraction(factor), pi_multiple=self.pi_multiple)

    def exact_value(self) -> Fraction:
        """Rational value, with pi replaced by its 60-digit rational"""
        return self.coefficient * PI_RATIONAL if self.pi_multiple else self.coefficient

    def wrapped(self) -> "Quantity":
        """Representative in [0, 2pi)"""
        if self.pi_multiple:
            return Quantity(coefficient=self.coefficient % 2, pi_multiple=True)
        turns = math.floor(self.coefficient / TWO_PI_RATIONAL)
        return Quantity(coefficient=self.coefficient - turns * TWO_PI_RATIONAL)

    def phase(self, multiplier) -> float:
        """(multiplier * self) mod 2pi as a float, reduced in exact arithmetic"""
        value = Fraction(multiplier) * self.coefficient
        if self.pi_multiple:
            return float(value % 2) * math.pi
        turns = math.floor(value / TWO_PI_RATIONAL)
        return float(value - turns * TWO_PI_RATIONAL)
