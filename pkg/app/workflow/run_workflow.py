import time

from ..models import RunConfig, ToolResult
from ..utils.errors import ConsistencyError, InvalidInputError, WitnessNotFoundError
from ..utils.logger import get_logger

logger = get_logger("run_workflow")

USAGE_ERROR = 2
CONSISTENCY_ERROR = 3


class RunWorkflow:
    """Dispatches a validated run to its tool and maps failures to exit codes"""

    def __init__(self, tool_factory=None, report_service=None):
        self.tool_factory = tool_factory
        self.report_service = report_service

    def set_services(self, tool_factory, report_service):
        """Set services via dependency injection"""
        self.tool_factory = tool_factory
        self.report_service = report_service

    def run(self, run: RunConfig) -> ToolResult:
        """Exit code 0/10/20 from the verdict, 2 on bad input, 3 on a failed cross-check"""
        start_time = time.time()
        logger.info(f"🔄 RunWorkflow.run started - command: {run.command.value}, symbol: {run.symbol}")

        if not all([self.tool_factory, self.report_service]):
            raise RuntimeError("Required services not configured")

        tool = self.tool_factory.get_tool(run.command)
        try:
            result = tool(run)
        except (InvalidInputError, WitnessNotFoundError) as e:
            logger.error(f"❌ {run.command.value}: {e}")
            return ToolResult(exit_code=USAGE_ERROR, report=self.report_service.error_json(type(e).__name__, str(e)))
        except ConsistencyError as e:
            logger.error(f"❌ consistency violation in {run.command.value}: {e}")
            return ToolResult(exit_code=CONSISTENCY_ERROR, report=self.report_service.error_json(type(e).__name__, str(e)))
        except Exception as e:
            logger.error(f"❌ unexpected failure in {run.command.value}: {e}")
            raise

        total_time = time.time() - start_time
        logger.info(f"🎉 RunWorkflow.run completed in {total_time:.3f}s with exit code {result.exit_code}")
        return result
