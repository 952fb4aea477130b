"""
Custom processors for structlog.
"""

import numpy as np
from structlog.types import EventDict, WrappedLogger

from src.config.settings import settings


def add_app_context(
    logger: WrappedLogger, method_name: str, event_dict: EventDict
) -> EventDict:
    """Stamp app name, version and environment on every entry."""
    event_dict["app_name"] = settings.APP_NAME
    event_dict["app_version"] = settings.APP_VERSION
    event_dict["environment"] = settings.ENVIRONMENT
    return event_dict


def plain_numbers(
    logger: WrappedLogger, method_name: str, event_dict: EventDict
) -> EventDict:
    """Turn numpy scalars and complex values into JSON-friendly numbers.

    Complex values become [re, im] pairs; small arrays become (nested) lists.
    """
    for key, value in event_dict.items():
        if isinstance(value, np.generic):
            value = value.item()
        if isinstance(value, complex):
            event_dict[key] = [value.real, value.imag]
        elif isinstance(value, np.ndarray) and value.size <= 16:
            arr = np.real_if_close(value)
            event_dict[key] = np.stack([arr.real, arr.imag], -1).tolist() if np.iscomplexobj(arr) else arr.tolist()
        else:
            event_dict[key] = value
    return event_dict
