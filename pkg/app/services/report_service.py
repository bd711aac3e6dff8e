from ..utils.logger import get_logger

from .mixins.json_mixin import JsonReportMixin
from .mixins.csv_mixin import CsvReportMixin
from .mixins.dot_mixin import DotExportMixin

logger = get_logger("report_service")


class ReportService(JsonReportMixin, CsvReportMixin, DotExportMixin):
    """Unified service for every report format the command line emits"""

    def __init__(self):
        JsonReportMixin.__init__(self)
        CsvReportMixin.__init__(self)
        DotExportMixin.__init__(self)
        self.logger = logger
