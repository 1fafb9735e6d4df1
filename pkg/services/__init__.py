"""
Services Package
Computational core: permutation groups, braids, Hurwitz moves, orbifolds,
Beauville structures, Dynkin configurations and surface invariants
"""
from typing import Optional


class ServiceError(Exception):
    """Base class of every domain error raised by a service"""

    def __init__(self, message: str, detail: Optional[dict] = None):
        self.message = message
        self.detail = detail or {}
        super().__init__(self.message)

    @property
    def name(self) -> str:
        return type(self).__name__
