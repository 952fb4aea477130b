"""
Structured logging for the Darboux phase-space toolkit.

Usage:
    from src.infrastructure.logging import configure_logging, get_logger, reset_context

    configure_logging()                       # once, in src.main
    logger = get_logger(__name__)
    reset_context(run_id="a1b2c3d4", b=2.0, p=1)
    logger.info("Check finished", check="orthonormality_initial", residual=3e-12)
"""

from src.infrastructure.logging.config import configure_logging, get_logger, reset_context

__all__ = [
    "configure_logging",
    "get_logger",
    "reset_context",
]
