"""
Service Factory for creating and managing service dependencies
"""

import time

from ..utils.logger import get_logger

from ..services.symbol_service import SymbolService
from ..services.diophantine_service import DiophantineService
from ..services.graph_service import GraphService
from ..services.decision_service import DecisionService
from ..services.numeric_service import NumericService
from ..services.witness_service import WitnessService
from ..services.applications_service import ApplicationsService
from ..services.report_service import ReportService

logger = get_logger("service_factory")


class ServiceFactory:
    """Factory for creating and managing service dependencies"""

    def __init__(self):
        self._services = {}
        self._initialized = False

    def initialize_services(self):
        """Initialize all services with proper dependencies"""
        start_time = time.time()
        logger.info("🏭 ServiceFactory.initialize_services started")

        if self._initialized:
            logger.debug("✅ Services already initialized, skipping")
            return

        # Exact arithmetic layer (no dependencies beyond the symbol)
        base_start = time.time()
        logger.debug("🔧 Creating symbol and resonance services...")
        self._services['symbol'] = SymbolService()
        self._services['diophantine'] = DiophantineService(symbol_service=self._services['symbol'])
        self._services['report'] = ReportService()
        base_time = time.time() - base_start
        logger.debug(f"✅ Base services created in {base_time:.3f}s")

        # Graph and decision layer
        graph_start = time.time()
        logger.debug("🔧 Creating graph and decision services...")
        self._services['graph'] = GraphService(
            symbol_service=self._services['symbol'],
            diophantine_service=self._services['diophantine']
        )
        self._services['decision'] = DecisionService(
            symbol_service=self._services['symbol'],
            diophantine_service=self._services['diophantine'],
            graph_service=self._services['graph']
        )
        graph_time = time.time() - graph_start
        logger.debug(f"✅ Graph services created in {graph_time:.3f}s")

        # Floating-point layer and closed-form applications
        numeric_start = time.time()
        logger.debug("🔧 Creating numeric, witness and application services...")
        self._services['numeric'] = NumericService(symbol_service=self._services['symbol'])
        self._services['witness'] = WitnessService(
            symbol_service=self._services['symbol'],
            graph_service=self._services['graph'],
            numeric_service=self._services['numeric']
        )
        self._services['applications'] = ApplicationsService(
            symbol_service=self._services['symbol'],
            graph_service=self._services['graph'],
            decision_service=self._services['decision']
        )
        numeric_time = time.time() - numeric_start
        logger.debug(f"✅ Numeric services created in {numeric_time:.3f}s")

        self._initialized = True
        total_time = time.time() - start_time
        logger.info(f"🎉 ServiceFactory.initialize_services completed in {total_time:.3f}s (base: {base_time:.3f}s, graph: {graph_time:.3f}s, numeric: {numeric_time:.3f}s)")

    def get_service(self, service_name: str):
        """Get a service by name"""
        if not self._initialized:
            raise RuntimeError("Services not initialized. Call initialize_services() first.")

        if service_name not in self._services:
            raise ValueError(f"Service '{service_name}' not found")

        return self._services[service_name]

    def get_all_services(self):
        """Get all services"""
        if not self._initialized:
            raise RuntimeError("Services not initialized. Call initialize_services() first.")

        return self._services.copy()

    def cleanup_services(self):
        """Drop every service instance"""
        logger.info("🧹 ServiceFactory.cleanup_services started")
        self._services.clear()
        self._initialized = False
        logger.info("🎉 ServiceFactory.cleanup_services completed")


# Global service factory instance
service_factory = ServiceFactory()
