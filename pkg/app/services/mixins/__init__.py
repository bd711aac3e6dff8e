"""
Mixin classes for ReportService functionality
"""

from .json_mixin import JsonReportMixin
from .csv_mixin import CsvReportMixin
from .dot_mixin import DotExportMixin

__all__ = [
    'JsonReportMixin',
    'CsvReportMixin',
    'DotExportMixin',
]
