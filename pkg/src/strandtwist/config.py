"""
Run Configuration
=================

Configuration records for simplification and census runs.

This module defines:
- SimplifyBudget: bounds for the Reidemeister-move simplifier
- RunConfig: census run parameters
- DEFAULT_BUDGET, DEFAULT_CONFIG
"""

import multiprocessing as mp
from dataclasses import dataclass, field
from typing import Iterator, Optional


@dataclass(frozen=True)
class SimplifyBudget:
    """
    Bounds for ``simplify``.

    Attributes:
        max_r3_moves: Depth of the breadth-first R3 exploration run at each
            local minimum of the greedy R1/R2 reduction.
        max_crossings_explored: Cap on the total crossing count summed over
            all diagrams visited by the R3 search.
        time_bound: Wall-clock bound in seconds, or None for no bound.
    """

    max_r3_moves: int = 6
    max_crossings_explored: int = 200_000
    time_bound: Optional[float] = None

    def __post_init__(self):
        assert self.max_r3_moves >= 0, "max_r3_moves must be nonnegative"
        assert self.max_crossings_explored >= 0, \
            "max_crossings_explored must be nonnegative"
        assert self.time_bound is None or self.time_bound >= 0, \
            "time_bound must be nonnegative"


DEFAULT_BUDGET = SimplifyBudget()


@dataclass
class RunConfig:
    """
    Census run parameters.

    The twist range is the inclusive interval [n_min, n_max]; 0 is always
    skipped.
    """

    n_min: int = -3
    n_max: int = 3
    max_crossings: int = 24
    budget: SimplifyBudget = field(default_factory=SimplifyBudget)
    input_path: Optional[str] = None
    output_path: Optional[str] = None
    workers: int = field(default_factory=mp.cpu_count)
    resume: bool = False

    def __post_init__(self):
        assert self.n_min <= self.n_max, "n_min must not exceed n_max"
        assert any(n != 0 for n in range(self.n_min, self.n_max + 1)), \
            "twist range must contain a nonzero value"
        assert self.max_crossings > 0, "max_crossings must be positive"
        assert self.workers > 0, "workers must be positive"

    def n_values(self) -> Iterator[int]:
        """Twist orders in the range, ascending, without 0."""
        return (n for n in range(self.n_min, self.n_max + 1) if n != 0)


DEFAULT_CONFIG = RunConfig()
