"""
Diagram Types
=============

Value types for oriented knot diagrams.

This module defines:
- Crossing: four arc labels counterclockwise from the incoming under-strand
- Face: a complementary region as a cyclic sequence of (arc, side) pairs
- PlanarDiagram: a validated, immutable PD-coded knot diagram
- UnknotVerdict: YES, NO, UNKNOWN

Sign convention: a crossing ``(i, j, k, l)`` has the under-strand running
i -> k. It is positive (right-handed) when the over-strand runs l -> j and
negative when it runs j -> l.
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, Tuple


Slot = Tuple[int, int]  # (crossing index, slot 0..3)


class UnknotVerdict(Enum):
    """Three-valued answer of ``is_unknot``."""
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Crossing:
    """One signed crossing; ``labels`` start at the incoming under-strand."""

    labels: Tuple[int, int, int, int]
    sign: int

    def __post_init__(self):
        assert self.sign in (1, -1), "crossing sign must be +1 or -1"

    @property
    def over_in_slot(self) -> int:
        return 3 if self.sign > 0 else 1

    @property
    def over_out_slot(self) -> int:
        return 1 if self.sign > 0 else 3

    def __str__(self) -> str:
        return "X[{},{},{},{}]".format(*self.labels)


@dataclass(frozen=True)
class Face:
    """
    A face of the diagram.

    ``edges`` lists (arc, side) in traversal order; side is +1 when the
    boundary walk follows the arc's orientation and -1 otherwise. ``darts``
    lists the (crossing, slot) each boundary step leaves from; the corner at
    a dart's crossing is the sector between slots ``slot - 1`` and ``slot``.
    """

    edges: Tuple[Tuple[int, int], ...]
    darts: Tuple[Slot, ...]

    def arcs(self) -> Tuple[int, ...]:
        return tuple(arc for arc, _ in self.edges)

    def side_of(self, arc: int) -> int:
        """Side of ``arc`` on this face, or 0 if the arc does not bound it."""
        for a, side in self.edges:
            if a == arc:
                return side
        return 0

    def step_of(self, arc: int) -> Tuple[Slot, Slot]:
        """(leave slot, arrive slot) of the boundary step along ``arc``."""
        for pos, (a, _) in enumerate(self.edges):
            if a == arc:
                nxt = self.darts[(pos + 1) % len(self.darts)]
                arrive = (nxt[0], (nxt[1] - 1) % 4)
                return self.darts[pos], arrive
        raise KeyError(arc)

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class PlanarDiagram:
    """
    An oriented, connected knot diagram in PD form.

    Arc labels run 1..2c and increase along the orientation, so arc k ends
    where arc k+1 (mod 2c) begins. The empty diagram is the unknot.
    """

    crossings: Tuple[Crossing, ...] = ()

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_arcs(self) -> int:
        return 2 * len(self.crossings)

    @cached_property
    def heads(self) -> Dict[int, Slot]:
        """Arc label -> the slot where the arc enters a crossing."""
        out = {}
        for ci, x in enumerate(self.crossings):
            out[x.labels[0]] = (ci, 0)
            out[x.labels[x.over_in_slot]] = (ci, x.over_in_slot)
        return out

    @cached_property
    def tails(self) -> Dict[int, Slot]:
        """Arc label -> the slot where the arc leaves a crossing."""
        out = {}
        for ci, x in enumerate(self.crossings):
            out[x.labels[2]] = (ci, 2)
            out[x.labels[x.over_out_slot]] = (ci, x.over_out_slot)
        return out

    def skeleton(self):
        """Unoriented skeleton: crossing tuples with arc labels as edge ids."""
        return [x.labels for x in self.crossings]

    def signs(self) -> Tuple[int, ...]:
        return tuple(x.sign for x in self.crossings)

    def writhe(self) -> int:
        return sum(x.sign for x in self.crossings)

    def __str__(self) -> str:
        if not self.crossings:
            return "PD[]"
        return "PD[" + ", ".join(str(x) for x in self.crossings) + "]"
