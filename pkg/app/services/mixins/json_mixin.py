"""
JSON report emission
"""

from typing import Any, Dict

import orjson

from ...config.config import config
from ...utils.logger import get_logger

logger = get_logger("json_mixin")

JSON_OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS | orjson.OPT_NON_STR_KEYS


class JsonReportMixin:
    """Versioned, key-sorted JSON so identical runs give identical bytes"""

    def __init__(self):
        self.logger = logger

    def to_json(self, payload: Dict[str, Any]) -> str:
        document = {"schema": config.JSON_SCHEMA_VERSION, **payload}
        return orjson.dumps(document, option=JSON_OPTIONS).decode() + "\n"

    def error_json(self, kind: str, message: str) -> str:
        return self.to_json({"error": {"kind": kind, "message": message}})
