"""
Pytest Configuration and Shared Fixtures
=========================================

Shared test fixtures and configuration for strandtwist tests.
"""

import os
import sys
import time
from contextlib import contextmanager

import numpy as np
import pytest

# Add src to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from strandtwist.diagram import UNKNOT, parse_pd  # noqa: E402
from strandtwist.fixtures import FIGURE_EIGHT_PD, TREFOIL_PD  # noqa: E402
from strandtwist.invariants import LaurentPoly  # noqa: E402


# ============================================================================
# Diagram Fixtures
# ============================================================================

@pytest.fixture
def unknot():
    """The crossingless unknot."""
    return UNKNOT


@pytest.fixture
def trefoil():
    """Left-handed trefoil, writhe -3."""
    return parse_pd(TREFOIL_PD)


@pytest.fixture
def figure_eight():
    """Figure-eight knot, writhe 0."""
    return parse_pd(FIGURE_EIGHT_PD)


@pytest.fixture
def kinked_unknot():
    """One-crossing unknot diagram."""
    return parse_pd("X[1,1,2,2]")


@pytest.fixture
def basic_knots(unknot, trefoil, figure_eight):
    """The three knots used by the property suites."""
    return {'unknot': unknot, 'trefoil': trefoil, 'figure-eight': figure_eight}


# ============================================================================
# Invariant Values
# ============================================================================

@pytest.fixture
def trefoil_jones():
    """-t^-4 + t^-3 + t^-1 (left-handed trefoil)."""
    return LaurentPoly({-4: -1, -3: 1, -1: 1})


@pytest.fixture
def figure_eight_jones():
    """t^-2 - t^-1 + 1 - t + t^2."""
    return LaurentPoly({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1})


# ============================================================================
# Random Generators
# ============================================================================

@pytest.fixture
def rng():
    """Seeded generator; every randomized test starts from the same state."""
    return np.random.default_rng(20240611)


# ============================================================================
# Report Paths
# ============================================================================

@pytest.fixture
def report_path(tmp_path):
    """JSON-lines report location inside a temporary directory."""
    return tmp_path / "census.jsonl"


# ============================================================================
# Timing
# ============================================================================

@pytest.fixture
def stopwatch():
    """
    ``with stopwatch() as elapsed:`` runs the block; ``elapsed()`` is the
    wall-clock time in seconds, frozen when the block exits.
    """
    @contextmanager
    def timer():
        started = time.perf_counter()
        stopped = []
        yield lambda: (stopped[0] if stopped else time.perf_counter()) - started
        stopped.append(time.perf_counter())

    return timer


# ============================================================================
# Markers
# ============================================================================

def pytest_configure(config):
    """Register custom markers."""
    config.addinivalue_line(
        "markers", "slow: marks tests as slow (deselect with '-m \"not slow\"')"
    )
    config.addinivalue_line(
        "markers", "integration: marks tests as integration tests"
    )
    config.addinivalue_line(
        "markers", "unit: marks tests as unit tests"
    )
    config.addinivalue_line(
        "markers", "acceptance: marks the end-to-end example regressions"
    )


# ============================================================================
# Command Line Options
# ============================================================================

def pytest_addoption(parser):
    """Add custom command line options."""
    parser.addoption(
        "--fast",
        action="store_true",
        default=False,
        help="Skip slow tests"
    )
    parser.addoption(
        "--acceptance-only",
        action="store_true",
        default=False,
        help="Run only the end-to-end regressions"
    )


def pytest_collection_modifyitems(config, items):
    """Skip slow or non-acceptance tests according to the options."""
    if config.getoption("--fast"):
        skip_slow = pytest.mark.skip(reason="--fast option enabled")
        for item in items:
            if "slow" in item.keywords:
                item.add_marker(skip_slow)

    if config.getoption("--acceptance-only"):
        skip_other = pytest.mark.skip(reason="--acceptance-only option enabled")
        for item in items:
            if "acceptance" not in item.keywords:
                item.add_marker(skip_other)
