"""
Domain value types
"""

from .base import FrozenModel, Rational, ComplexValue, IntPair
from .symbol import PolynomialSymbol, Slope, GapTag, GapClass, Quantity, PI_RATIONAL
from .resonance import ResonancePairSet, ResonanceClass
from .graph import (
    EdgeColor,
    GraphProvenance,
    ColoredGraph,
    CycleWitness,
    PathWitness,
    ComponentSummary,
    INFINITY,
)
from .verdict import VerdictReason, Hypotheses, ObservabilityVerdict
from .state import SegmentSpec, FourierState, QuadratureSpec, RatioRow, ResidualReport
from .applications import GammaCertificate, CriterionOutcome, KdvCriterionResult
from .run_config import Command, OutputFormat, WitnessKind, RunConfig, ToolResult

__all__ = [
    'FrozenModel', 'Rational', 'ComplexValue', 'IntPair',
    'PolynomialSymbol', 'Slope', 'GapTag', 'GapClass', 'Quantity', 'PI_RATIONAL',
    'ResonancePairSet', 'ResonanceClass',
    'EdgeColor', 'GraphProvenance', 'ColoredGraph', 'CycleWitness', 'PathWitness',
    'ComponentSummary', 'INFINITY',
    'VerdictReason', 'Hypotheses', 'ObservabilityVerdict',
    'SegmentSpec', 'FourierState', 'QuadratureSpec', 'RatioRow', 'ResidualReport',
    'GammaCertificate', 'CriterionOutcome', 'KdvCriterionResult',
    'Command', 'OutputFormat', 'WitnessKind', 'RunConfig', 'ToolResult',
]
