"""
Disk Certificates
=================

Diagram-level certificates that a twisting circle bounds a disk in the
knot's complement.

This module defines:
- CertificateStatus: Certified / Unverified
- nugatory_certificate: a site's own circle bounds a disk (face test)
- companion_unlinking_certificate: the site's circle, drawn into the
  diagram as a second component, can be separated from the knot

Both are one-sided: Certified is a proof, Unverified only means the test
found nothing.
"""

import logging
import time
from enum import Enum
from typing import Hashable, List, Set

import networkx as nx

from strandtwist.config import DEFAULT_BUDGET, SimplifyBudget
from strandtwist.diagram.core import faces
from strandtwist.diagram.moves import (
    bigon_candidates, kink_candidates, remove_bigon, remove_kink,
    slide_triangle, triangle_candidates,
)
from strandtwist.diagram.skeleton import occurrences, trace_faces
from strandtwist.diagram.types import PlanarDiagram
from strandtwist.errors import InvalidSite
from strandtwist.tangle.sites import _resolve, TwistSite, wind_wrap

logger = logging.getLogger(__name__)


class CertificateStatus(Enum):
    CERTIFIED = "Certified"
    UNVERIFIED = "Unverified"


def nugatory_certificate(d: PlanarDiagram, s: TwistSite) -> CertificateStatus:
    """
    Certified when the faces across ``arc_a`` and across ``arc_b`` (away
    from the site's face) coincide.

    A path through that face closes the site's planar arc into a loop that
    meets the knot twice; the twisting circle then bounds the half of the
    resulting sphere that misses the knot.
    """
    if s.wrap:
        return CertificateStatus.UNVERIFIED
    _resolve(d, s)
    fs = faces(d)

    def across(arc: int) -> Set[int]:
        return {fi for fi, f in enumerate(fs) if fi != s.face and f.side_of(arc)}

    if across(s.arc_a) & across(s.arc_b):
        return CertificateStatus.CERTIFIED
    return CertificateStatus.UNVERIFIED


# ============================================================================
# Knot plus twisting circle
# ============================================================================

CIRCLE = "c"


def _is_circle(e: Hashable) -> bool:
    return isinstance(e, tuple) and e[0] == CIRCLE


def circle_skeleton(d: PlanarDiagram, s: TwistSite) -> List[List[Hashable]]:
    """
    Two-component skeleton: ``d`` plus the site's twisting circle, which
    passes over both site arcs on one side and under both on the other,
    then winds ``s.wrap`` full turns around the first strand.
    """
    face, _ = _resolve(d, s)
    A, B = face.step_of(s.arc_a)
    C, D = face.step_of(s.arc_b)
    skel = [list(x) for x in d.skeleton()]
    e_a, e_b, e_mid, f_c, f_d, f_mid = ("e", 0), ("e", 1), ("e", 2), ("f", 0), ("f", 1), ("f", 2)
    c1, c2, c3, c4 = ((CIRCLE, k) for k in range(1, 5))
    skel[A[0]][A[1]] = e_a
    skel[B[0]][B[1]] = e_b
    skel[C[0]][C[1]] = f_c
    skel[D[0]][D[1]] = f_d
    x_left, x_right = len(skel), len(skel) + 1
    skel.append([e_a, c1, e_mid, c4])
    skel.append([c3, e_b, c4, e_mid])
    skel.append([f_d, c2, f_mid, c1])
    skel.append([c2, f_c, c3, f_mid])
    if s.wrap:
        wind_wrap(skel, ((x_left, 0), A), (B, (x_right, 1)), s.wrap)
    return skel


def _link_planar(skel) -> bool:
    if not skel:
        return True
    graph = nx.MultiGraph()
    graph.add_nodes_from(range(len(skel)))
    for e, where in occurrences(skel).items():
        graph.add_edge(where[0][0], where[1][0], key=e)
    parts = nx.number_connected_components(graph)
    return len(trace_faces(skel)) == len(skel) + 1 + parts


def _split(skel) -> bool:
    """No mixed crossing, or the circle is on one level at all of them."""
    levels = set()
    for x in skel:
        slots = [s for s in range(4) if _is_circle(x[s])]
        if slots and len(slots) < 4:
            levels.update(s % 2 for s in slots)
    return len(levels) <= 1


def _descend(skel):
    while True:
        for ci, s in kink_candidates(skel):
            rest, _ = remove_kink(skel, ci, s)
            if _link_planar(rest):
                skel = rest
                break
        else:
            for move in bigon_candidates(skel):
                rest, _ = remove_bigon(skel, *move)
                if _link_planar(rest):
                    skel = rest
                    break
            else:
                return skel


def _key(skel):
    names = {}
    for x in skel:
        for e in x:
            names.setdefault(e, (len(names), _is_circle(e)))
    return tuple(tuple(names[e] for e in x) for x in skel)


def companion_unlinking_certificate(d: PlanarDiagram, s: TwistSite,
                                    budget: SimplifyBudget = DEFAULT_BUDGET) -> CertificateStatus:
    """
    Simplify the knot-plus-circle diagram (R1/R2 descent, breadth-first R3
    slides) until the circle sits entirely above or below the knot.

    Raises:
        InvalidSite: ``s`` is not a site of ``d``
    """
    if not d.crossings:
        raise InvalidSite("the unknot diagram has no sites")
    started = time.monotonic()
    frontier = [_descend(circle_skeleton(d, s))]
    seen = {_key(frontier[0])}
    explored = 0
    for depth in range(budget.max_r3_moves + 1):
        next_frontier = []
        for skel in frontier:
            if _split(skel):
                logger.debug("circle of %s split off after %d R3 rounds", s.address(), depth)
                return CertificateStatus.CERTIFIED
            if depth == budget.max_r3_moves:
                continue
            for tri in triangle_candidates(skel):
                moved = _descend(slide_triangle(skel, tri))
                key = _key(moved)
                if key in seen:
                    continue
                seen.add(key)
                next_frontier.append(moved)
                explored += len(moved)
        if explored > budget.max_crossings_explored:
            break
        if budget.time_bound is not None and time.monotonic() - started > budget.time_bound:
            break
        frontier = next_frontier
    logger.debug("circle of %s not separated (%d crossings explored)", s.address(), explored)
    return CertificateStatus.UNVERIFIED
