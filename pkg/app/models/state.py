import math
from typing import Dict, Tuple

from pydantic import Field, field_validator

from .base import ComplexValue, FrozenModel, Rational
from .symbol import Quantity


class SegmentSpec(FrozenModel):
    """Observation segment t -> (t0 + t, x0 - v t), 0 <= t <= T"""
    t0: Quantity = Field(default_factory=Quantity)
    x0: Quantity = Field(default_factory=Quantity)
    v: Rational
    T: float = 1.0

    @field_validator("t0", "x0", mode="before")
    @classmethod
    def _parse_quantity(cls, value):
        if isinstance(value, (str, int)):
            return Quantity.parse(str(value))
        return value

    @field_validator("T")
    @classmethod
    def _positive_length(cls, value):
        if not value > 0:
            raise ValueError("segment length T must be positive")
        return value


class FourierState(FrozenModel):
    """Finitely supported initial datum u0(x) = sum c_k e^{ikx}"""
    coefficients: Dict[int, ComplexValue] = Field(default_factory=dict)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(sorted(self.coefficients))

    @property
    def max_mode(self) -> int:
        return max((abs(k) for k in self.coefficients), default=0)

    def norm_sq(self) -> float:
        """Parseval: 2 pi sum |c_k|^2"""
        return 2 * math.pi * math.fsum(abs(c) ** 2 for c in self.coefficients.values())


class QuadratureSpec(FrozenModel):
    """Composite Gauss-Legendre rule on [0, T]"""
    panels: int = Field(default=4, ge=1)
    nodes_per_panel: int = Field(default=8, ge=2)
    tolerance: float = Field(default=1e-10, gt=0)


class RatioRow(FrozenModel):
    n: int
    norm_sq: float
    seg_integral: float
    ratio: float
    first_segment: float
    second_segment: float


class ResidualReport(FrozenModel):
    """Largest |u| sampled along each segment"""
    residuals: Tuple[float, ...]
    samples: int
    norm_sq: float

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)
