"""
CSV report emission
"""

import csv
import io
from typing import Iterable, Sequence

from ...utils.logger import get_logger

logger = get_logger("csv_mixin")

RATIO_HEADER = ("n", "norm_sq", "seg_integral", "ratio")
TRACE_HEADER = ("t", "re", "im", "abs_sq")


class CsvReportMixin:
    """Header row first, one record per line"""

    def __init__(self):
        self.logger = logger

    def to_csv(self, header: Sequence[str], rows: Iterable[Sequence]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        count = 0
        for row in rows:
            writer.writerow([repr(x) if isinstance(x, float) else x for x in row])
            count += 1
        self.logger.debug(f"🧾 wrote {count} CSV rows")
        return buffer.getvalue()

    def ratio_csv(self, rows) -> str:
        return self.to_csv(RATIO_HEADER, ((r.n, r.norm_sq, r.seg_integral, r.ratio) for r in rows))

    def trace_csv(self, trace) -> str:
        return self.to_csv(TRACE_HEADER, trace)
