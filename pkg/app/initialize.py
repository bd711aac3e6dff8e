"""
Initialization module for setting up the application with proper layering
"""
import time

from .config.config import config
from .utils.logger import get_logger
from .factory.service_factory import service_factory
from .factory.tool_factory import ToolFactory
from .workflow.run_workflow import RunWorkflow

logger = get_logger("initialize")

_tool_factory = None
_workflow = None


def initialize_application():
    """Initialize the application with proper service dependencies"""
    global _tool_factory, _workflow
    start_time = time.time()
    logger.debug("🚀 Starting application initialization...")

    if not config.validate():
        raise RuntimeError("Invalid configuration; see the log for details")
    if config.LOG_LEVEL.upper() == "DEBUG":
        config.print_config()

    services_start = time.time()
    service_factory.initialize_services()
    services_time = time.time() - services_start
    logger.debug(f"✅ Services initialized in {services_time:.3f}s")

    # Tools use the service factory directly
    tools_start = time.time()
    _tool_factory = ToolFactory()
    tools_time = time.time() - tools_start
    logger.debug(f"✅ Tool factory initialized in {tools_time:.3f}s ({', '.join(_tool_factory.get_tool_names())})")

    _workflow = RunWorkflow()
    _workflow.set_services(_tool_factory, service_factory.get_service('report'))

    total_time = time.time() - start_time
    logger.debug(f"Application initialization completed in {total_time:.3f}s (services: {services_time:.3f}s, tools: {tools_time:.3f}s)")
    return service_factory


def cleanup_application():
    """Cleanup application resources - delegates to ServiceFactory"""
    global _tool_factory, _workflow
    service_factory.cleanup_services()
    _tool_factory = None
    _workflow = None


def get_service(service_name: str):
    """Get a service by name"""
    if not service_factory._initialized:
        raise RuntimeError("Application not initialized. Call initialize_application() first.")
    return service_factory.get_service(service_name)


def get_service_factory():
    """Get the service factory instance"""
    if not service_factory._initialized:
        raise RuntimeError("Application not initialized. Call initialize_application() first.")
    return service_factory


def get_tool_factory():
    """Get the tool factory instance"""
    if _tool_factory is None:
        raise RuntimeError("Application not initialized. Call initialize_application() first.")
    return _tool_factory


def get_workflow() -> RunWorkflow:
    if _workflow is None:
        raise RuntimeError("Application not initialized. Call initialize_application() first.")
    return _workflow
