from enum import Enum
from typing import Optional, Tuple

from .base import FrozenModel, IntPair, Rational
from .graph import ComponentSummary, CycleWitness, PathWitness
from .symbol import PolynomialSymbol, Quantity


class VerdictReason(str, Enum):
    EMPTY_PI = "EmptyPi"
    RESONANT_PAIR = "ResonantPair"
    NO_CYCLE = "NoCycle"
    NO_CYCLE_FINITE_G = "NoCycleFiniteG"
    TWO_COLORED_CYCLE = "TwoColoredCycle"
    INFINITE_G = "InfiniteG"
    GAMMA_DEGENERATE = "GammaDegenerate"


class Hypotheses(FrozenModel):
    h1: bool
    h2: bool
    n_v: Optional[int] = None


class ObservabilityVerdict(FrozenModel):
    """Outcome of a one- or two-segment decision.

    qualitative / quantitative are None when no decision is possible.
    """
    symbol: PolynomialSymbol
    slopes: Tuple[Rational, ...]
    qualitative: Optional[bool]
    quantitative: Optional[bool]
    reason: VerdictReason
    cycle_witness: Optional[CycleWitness] = None
    path_witness: Optional[PathWitness] = None
    resonant_pair: Optional[IntPair] = None
    summary: Optional[ComponentSummary] = None
    min_time: Optional[Quantity] = None
    hypotheses: Tuple[Hypotheses, ...] = ()

    @property
    def exit_code(self) -> int:
        if self.quantitative:
            return 0
        if self.qualitative:
            return 10
        return 20
