"""
Utility functions
"""
from utils.logger import setup_logger
from utils.checks import (
    require_all_at_least,
    require_positive,
    require_range,
    require_same_degree,
)

__all__ = [
    "setup_logger",
    "require_all_at_least",
    "require_positive",
    "require_range",
    "require_same_degree",
]
