"""
Factory package for the observability engine
"""

from .service_factory import service_factory
from .tool_factory import ToolFactory

__all__ = [
    'service_factory',
    'ToolFactory'
]
