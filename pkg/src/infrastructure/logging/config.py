"""
Logging configuration using structlog.

Provides environment-aware logging with:
- JSON format for machine-read CI logs
- Colored console format for interactive runs
- Context binding for run ids and model parameters

Logs go to stderr: stdout is reserved for datasets emitted by the CLI.
"""

import sys
import logging
from typing import List

import structlog
from structlog.types import Processor

from src.config.settings import settings
from src.infrastructure.logging.processors import add_app_context, plain_numbers


def get_processors(log_format: str) -> List[Processor]:
    """Get processors based on log format."""

    common_processors = [
        structlog.contextvars.merge_contextvars,
        structlog.stdlib.add_log_level,
        structlog.stdlib.add_logger_name,
        structlog.processors.TimeStamper(fmt="iso"),
        structlog.processors.StackInfoRenderer(),
        add_app_context,
        plain_numbers,
    ]

    if log_format == "json":
        return common_processors + [
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
            structlog.processors.JSONRenderer()
        ]
    else:
        return common_processors + [
            structlog.processors.format_exc_info,
            structlog.dev.ConsoleRenderer(
                colors=sys.stderr.isatty(),
                exception_formatter=structlog.dev.plain_traceback
            )
        ]


def configure_logging(level: str | None = None) -> None:
    """
    Configure structlog for the application.

    Call this once at startup (src.main does). `level` overrides the
    YAML setting, e.g. "WARNING" for quiet dataset emission.
    """
    log_cfg = settings.config_yaml.get("logging", {})
    log_format = log_cfg.get("format", "console").lower()
    log_level = (level or log_cfg.get("level", "INFO")).upper()

    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=getattr(logging, log_level, logging.INFO),
        force=True,
    )

    structlog.configure(
        processors=get_processors(log_format),
        wrapper_class=structlog.make_filtering_bound_logger(
            getattr(logging, log_level, logging.INFO)
        ),
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )


def get_logger(name: str = None) -> structlog.stdlib.BoundLogger:
    """
    Get a configured logger instance.

    Args:
        name: Logger name (typically __name__)

    Example:
        logger = get_logger(__name__)
        logger.info("Quadrature converged", nodes=128, residual=2e-15)
    """
    return structlog.get_logger(name)


def reset_context(**kwargs) -> None:
    """
    Clear ALL bound context variables, then optionally set new ones.

    Used at the start of every verify/emit run.
    """
    structlog.contextvars.clear_contextvars()
    if kwargs:
        structlog.contextvars.bind_contextvars(**kwargs)
