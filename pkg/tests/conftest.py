import io

import pytest
from hypothesis import settings

from app import SurfaceAtlas

# Runs are reproducible and the ascent / orbit searches have no wall-clock deadline
settings.register_profile("atlas", derandomize=True, deadline=None, max_examples=50)
settings.load_profile("atlas")


class Invocation:
    """Runs the application against in-memory streams"""

    def __init__(self, stdin: str = ""):
        self.stdout = io.StringIO()
        self.stderr = io.StringIO()
        self.app = SurfaceAtlas(stdin=io.StringIO(stdin), stdout=self.stdout, stderr=self.stderr)

    def __call__(self, *argv: str) -> int:
        return self.app.run(list(argv))


@pytest.fixture
def atlas():
    """Factory: atlas(stdin="...") returns a fresh Invocation"""
    return Invocation
