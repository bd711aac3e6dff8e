import os

from dotenv import load_dotenv

from ..utils.logger import get_logger

load_dotenv()

logger = get_logger("config")

class Config:
    """Configuration management for the observability engine"""

    # Logging
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")

    # Graph materialization
    DEFAULT_WINDOW: int = int(os.getenv("DEFAULT_WINDOW", "20"))
    ORACLE_WINDOW: int = int(os.getenv("ORACLE_WINDOW", "50"))
    PATH_WITNESS_PAIRS: int = int(os.getenv("PATH_WITNESS_PAIRS", "3"))

    # Quadrature
    QUAD_NODES_PER_PANEL: int = int(os.getenv("QUAD_NODES_PER_PANEL", "8"))
    QUAD_MIN_PANELS: int = int(os.getenv("QUAD_MIN_PANELS", "4"))
    QUAD_TOLERANCE: float = float(os.getenv("QUAD_TOLERANCE", "1e-10"))

    # Witness verification
    RESIDUAL_SAMPLES: int = int(os.getenv("RESIDUAL_SAMPLES", "1000"))
    RESIDUAL_TOLERANCE: float = float(os.getenv("RESIDUAL_TOLERANCE", "1e-10"))
    RATIO_BOUND_SLACK: float = float(os.getenv("RATIO_BOUND_SLACK", "1e-8"))

    # Sweeps
    SWEEP_WORKERS: int = int(os.getenv("SWEEP_WORKERS", "4"))
    SWEEP_DEFAULT_SAMPLES: int = int(os.getenv("SWEEP_DEFAULT_SAMPLES", "20"))
    SWEEP_DEFAULT_SEED: int = int(os.getenv("SWEEP_DEFAULT_SEED", "0"))

    # Number theory
    MAX_TRIAL_DIVISION: int = int(os.getenv("MAX_TRIAL_DIVISION", str(10**9)))
    GAP_CONSTANT_DIGITS: int = int(os.getenv("GAP_CONSTANT_DIGITS", "9"))

    # Reports
    JSON_SCHEMA_VERSION: int = int(os.getenv("JSON_SCHEMA_VERSION", "1"))

    @classmethod
    def validate(cls) -> bool:
        """Validate that the configured limits are usable"""
        problems = []
        if cls.QUAD_NODES_PER_PANEL < 2:
            problems.append("QUAD_NODES_PER_PANEL must be at least 2")
        if cls.QUAD_MIN_PANELS < 1:
            problems.append("QUAD_MIN_PANELS must be at least 1")
        if cls.QUAD_TOLERANCE <= 0 or cls.RESIDUAL_TOLERANCE <= 0:
            problems.append("tolerances must be positive")
        if cls.PATH_WITNESS_PAIRS < 1:
            problems.append("PATH_WITNESS_PAIRS must be at least 1")
        if cls.DEFAULT_WINDOW < 1 or cls.ORACLE_WINDOW < 1:
            problems.append("windows must be at least 1")
        if cls.SWEEP_WORKERS < 1:
            problems.append("SWEEP_WORKERS must be at least 1")

        for problem in problems:
            logger.error(problem)
        if problems:
            return False

        logger.debug("Configuration validated successfully")
        return True

    @classmethod
    def print_config(cls):
        """Log the current configuration"""
        logger.info("Engine Configuration:")
        logger.info(f"  Log Level: {cls.LOG_LEVEL}")
        logger.info(f"  Default Window: {cls.DEFAULT_WINDOW}")
        logger.info(f"  Oracle Window: {cls.ORACLE_WINDOW}")
        logger.info(f"  Path Witness Pairs: {cls.PATH_WITNESS_PAIRS}")
        logger.info(f"  Quadrature: {cls.QUAD_NODES_PER_PANEL} nodes/panel, >= {cls.QUAD_MIN_PANELS} panels, tol {cls.QUAD_TOLERANCE}")
        logger.info(f"  Residual: {cls.RESIDUAL_SAMPLES} samples, tol {cls.RESIDUAL_TOLERANCE}")
        logger.info(f"  Sweep Workers: {cls.SWEEP_WORKERS}")
        logger.info(f"  Max Trial Division: {cls.MAX_TRIAL_DIVISION}")
        logger.info(f"  JSON Schema Version: {cls.JSON_SCHEMA_VERSION}")

# Global config instance
config = Config()
