"""
Diagram Skeletons
=================

Rewrites work on an unoriented *skeleton*: a list of 4-tuples of hashable
edge ids, each listed counterclockwise with the under-strand on slots 0 and
2. Orientation, labels and signs are recovered by ``orient``.

This module defines:
- occurrences / other_end: edge incidence lookups
- strand_walk: straight-through traversal of a closed strand
- orient: skeleton -> PlanarDiagram with 1..2c labels and signs
- trace_faces / is_planar: face boundary walks and the Euler check
- start_from: choose a traversal start that keeps an old orientation
"""

from collections import defaultdict
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from strandtwist.diagram.types import Crossing, PlanarDiagram, Slot
from strandtwist.errors import Disconnected, MalformedCode

Skeleton = List[List[Hashable]]


def occurrences(skel: Sequence[Sequence[Hashable]]) -> Dict[Hashable, List[Slot]]:
    """Edge id -> the (crossing, slot) pairs it occupies."""
    occ = defaultdict(list)
    for ci, x in enumerate(skel):
        for s, e in enumerate(x):
            occ[e].append((ci, s))
    return occ


def other_end(occ: Dict[Hashable, List[Slot]], e: Hashable, here: Slot) -> Slot:
    first, second = occ[e]
    return second if first == here else first


def strand_walk(skel, start: Slot, occ=None) -> List[Slot]:
    """
    Entry slots visited by walking straight through crossings from ``start``
    until the walk closes.
    """
    occ = occ if occ is not None else occurrences(skel)
    limit = 4 * len(skel)
    visits = []
    here = start
    while True:
        visits.append(here)
        ci, s = here
        out = (ci, (s + 2) % 4)
        here = other_end(occ, skel[ci][out[1]], out)
        if here == start:
            return visits
        if len(visits) > limit:
            raise MalformedCode("strand walk does not close")


def orient(skel, start: Optional[Slot] = None) -> Tuple[PlanarDiagram, Dict[Hashable, int]]:
    """
    Label and sign a one-component skeleton.

    Args:
        skel: crossing tuples of edge ids, under-strand on slots 0 and 2
        start: entry slot of the first visit; the edge entering there becomes
            arc 1 and the walk direction fixes the orientation

    Returns:
        (diagram, labels) where labels maps each edge id to its arc label

    Example:
        >>> d, _ = orient([("a", "a", "b", "b")])
        >>> d.crossings[0].labels
        (1, 1, 2, 2)
    """
    c = len(skel)
    if c == 0:
        return PlanarDiagram(()), {}
    occ = occurrences(skel)
    for e, where in occ.items():
        if len(where) != 2:
            raise MalformedCode(f"edge {e!r} occurs {len(where)} times")

    visits = strand_walk(skel, start or (0, 0), occ)
    if len(visits) != 2 * c:
        raise Disconnected(f"strand covers {len(visits)} of {2 * c} arcs")

    labels = {}
    under_in, over_in = {}, {}
    for t, (ci, s) in enumerate(visits):
        labels[skel[ci][s]] = t + 1
        (under_in if s % 2 == 0 else over_in)[ci] = s
    if len(under_in) != c or len(over_in) != c:
        raise MalformedCode("a strand passes one crossing twice")

    crossings = []
    for ci, x in enumerate(skel):
        u = under_in[ci]
        rotated = tuple(labels[x[(u + r) % 4]] for r in range(4))
        sign = 1 if (over_in[ci] - u) % 4 == 3 else -1
        crossings.append(Crossing(rotated, sign))
    return PlanarDiagram(tuple(crossings)), labels


def trace_faces(skel) -> List[List[Slot]]:
    """
    Face boundary walks. A walk arriving at slot s leaves along slot s + 1;
    each face is the list of slots it leaves from.
    """
    occ = occurrences(skel)
    seen = set()
    faces = []
    for ci in range(len(skel)):
        for s in range(4):
            if (ci, s) in seen:
                continue
            face = []
            here = (ci, s)
            while here not in seen:
                seen.add(here)
                face.append(here)
                cj, sj = other_end(occ, skel[here[0]][here[1]], here)
                here = (cj, (sj + 1) % 4)
            faces.append(face)
    return faces


def is_planar(skel) -> bool:
    """Euler check F = c + 2 for a connected skeleton."""
    return not skel or len(trace_faces(skel)) == len(skel) + 2


def start_from(skel, d: PlanarDiagram, index_map: Dict[int, int]) -> Optional[Slot]:
    """
    Entry slot in ``skel`` of the lowest-labelled arc of ``d`` whose head
    survived unchanged; ``index_map`` maps old crossing indices to new ones.
    """
    for arc in sorted(d.heads):
        ci, s = d.heads[arc]
        if ci in index_map and skel[index_map[ci]][s] == arc:
            return index_map[ci], s
    return None


def fresh_ids(skel, count: int) -> List[int]:
    """``count`` integer edge ids not used in ``skel``."""
    used = [e for x in skel for e in x if isinstance(e, int)]
    base = max(used, default=0) + 1
    return list(range(base, base + count))
