"""
Services package: one service per concern, wired by the service factory
"""

from .symbol_service import SymbolService
from .diophantine_service import DiophantineService
from .graph_service import GraphService
from .decision_service import DecisionService
from .numeric_service import NumericService
from .witness_service import WitnessService
from .applications_service import ApplicationsService
from .report_service import ReportService

__all__ = [
    'SymbolService',
    'DiophantineService',
    'GraphService',
    'DecisionService',
    'NumericService',
    'WitnessService',
    'ApplicationsService',
    'ReportService',
]
