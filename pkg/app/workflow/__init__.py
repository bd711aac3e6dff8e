"""
Workflow package: validated runs in, reports and exit codes out
"""

from .run_workflow import RunWorkflow

__all__ = [
    "RunWorkflow"
]
