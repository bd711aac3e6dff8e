from enum import Enum
from typing import Dict, Optional, Tuple

from .base import FrozenModel
from .verdict import ObservabilityVerdict


class GammaCertificate(FrozenModel):
    """Membership of v in {k^2 + km + m^2 : k != m}"""
    v: int
    member: bool
    representation: Optional[Tuple[int, int]] = None


class CriterionOutcome(str, Enum):
    OBSERVABLE_BY_1 = "ObservableBy1"
    OBSERVABLE_BY_2 = "ObservableBy2"
    INCONCLUSIVE = "Inconclusive"


class KdvCriterionResult(FrozenModel):
    v1: int
    v2: int
    outcome: CriterionOutcome
    prime: Optional[int] = None
    valuations: Optional[Tuple[int, int]] = None
    valuation_table: Dict[int, Tuple[int, int]] = {}
    certificates: Tuple[GammaCertificate, GammaCertificate]
    fallback: Optional[ObservabilityVerdict] = None
