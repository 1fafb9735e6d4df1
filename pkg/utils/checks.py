"""
共用的前置條件檢查
檢查失敗時拋出呼叫端服務指定的錯誤類別
"""
from typing import Iterable, Optional, Type

from utils.logger import setup_logger

logger = setup_logger("utils.checks")


def require_same_degree(error: Type[Exception], *degrees: int) -> int:
    """
    Check that every degree is equal

    Args:
        error: Exception class to raise on mismatch
        degrees: Degrees (or ranks, strand counts) to compare

    Returns:
        int: the common degree
    """
    distinct = sorted(set(degrees))
    if len(distinct) > 1:
        logger.debug(f"degree mismatch: {distinct}")
        raise error(f"degree mismatch: {', '.join(str(d) for d in distinct)}")
    return distinct[0]


def require_range(
    error: Type[Exception],
    name: str,
    value: int,
    low: Optional[int] = None,
    high: Optional[int] = None,
) -> int:
    """Check low <= value <= high (either bound may be omitted)"""
    if low is not None and value < low:
        raise error(f"{name} must be >= {low}, got {value}")
    if high is not None and value > high:
        raise error(f"{name} must be <= {high}, got {value}")
    return value


def require_positive(error: Type[Exception], **values: int) -> None:
    """Check that every keyword value is >= 1"""
    for name, value in values.items():
        require_range(error, name, value, low=1)


def require_all_at_least(
    error: Type[Exception], name: str, values: Iterable[int], low: int
) -> None:
    """Check that every entry of a sequence is >= low"""
    for value in values:
        if value < low:
            raise error(f"every {name} must be >= {low}, got {value}")
