"""
Reidemeister Moves and Simplification
=====================================

Move detection, move application and the budgeted simplifier.

This module defines:
- kink_candidates, bigon_candidates, triangle_candidates and the matching
  remove_kink, remove_bigon, slide_triangle: moves on raw skeletons, used
  for knots and for two-component link diagrams alike
- r1_moves / apply_r1, r2_moves / apply_r2, r3_moves / apply_r3: the same
  moves on PlanarDiagram, lowest label first
- insert_r1 / insert_r2 / scramble: crossing-increasing moves for tests
- simplify: greedy R1/R2 descent with breadth-first R3 exploration
- is_unknot: three-valued unknot certificate
"""

import logging
import time
from typing import List, Optional, Tuple

import numpy as np

from strandtwist.config import DEFAULT_BUDGET, SimplifyBudget
from strandtwist.diagram.core import UNKNOT, faces
from strandtwist.diagram.skeleton import (
    fresh_ids, is_planar, occurrences, orient, other_end, start_from, trace_faces,
)
from strandtwist.diagram.types import PlanarDiagram, UnknotVerdict
from strandtwist.errors import KnotEngineError

logger = logging.getLogger(__name__)


def _rebuild(d: PlanarDiagram, skel, keep: List[int]) -> Optional[PlanarDiagram]:
    """Orient ``skel`` (built from the crossings ``keep`` of ``d``, in order)."""
    if not skel:
        return UNKNOT
    if not is_planar(skel):
        return None
    index_map = {old: new for new, old in enumerate(keep)}
    try:
        result, _ = orient(skel, start_from(skel, d, index_map))
    except KnotEngineError:
        return None
    return result


def _replace(skel, old, new):
    for x in skel:
        for s in range(4):
            if x[s] == old:
                x[s] = new


# ============================================================================
# Skeleton-level moves (shared with link diagrams)
# ============================================================================

def kink_candidates(skel) -> List[Tuple[int, int]]:
    """(crossing, slot) where one edge occupies slots s and s+1."""
    return [(ci, s) for ci, x in enumerate(skel) for s in range(4)
            if x[s] == x[(s + 1) % 4]]


def remove_kink(skel, ci: int, s: int):
    """Skeleton without crossing ``ci``; returns (skeleton, kept indices)."""
    a, b = skel[ci][(s + 2) % 4], skel[ci][(s + 3) % 4]
    keep = [k for k in range(len(skel)) if k != ci]
    rest = [list(skel[k]) for k in keep]
    if a != b:
        _replace(rest, b, a)
    return rest, keep


def bigon_candidates(skel) -> List[Tuple[int, int, int, int]]:
    """
    Removable bigons as (x, sx, y, sy): the boundary steps leave crossing x
    at slot sx and crossing y at slot sy, and one strand is over at both.
    """
    if len(skel) < 2:
        return []
    occ = occurrences(skel)
    found = []
    for walk in trace_faces(skel):
        if len(walk) != 2:
            continue
        (x, sx), (y, sy) = walk
        if x == y:
            continue
        _, ty = other_end(occ, skel[x][sx], (x, sx))
        if sx % 2 == ty % 2:
            found.append((x, sx, y, sy))
    return found


def remove_bigon(skel, x: int, sx: int, y: int, sy: int):
    """Skeleton without the bigon's crossings; returns (skeleton, kept indices)."""
    occ = occurrences(skel)
    _, ty = other_end(occ, skel[x][sx], (x, sx))
    _, tx = other_end(occ, skel[y][sy], (y, sy))
    e_x, e_y = skel[x][(sx + 2) % 4], skel[y][(ty + 2) % 4]
    f_x, f_y = skel[x][(tx + 2) % 4], skel[y][(sy + 2) % 4]
    keep = [k for k in range(len(skel)) if k not in (x, y)]
    rest = [list(skel[k]) for k in keep]
    if e_y != e_x:
        _replace(rest, e_y, e_x)
    f_x = e_x if f_x == e_y else f_x
    f_y = e_x if f_y == e_y else f_y
    if f_y != f_x:
        _replace(rest, f_y, f_x)
    return rest, keep


def triangle_candidates(skel) -> List[Tuple[Tuple[int, int], ...]]:
    """Triangular faces (as walks) with a strand at the same level twice."""
    if len(skel) < 3:
        return []
    occ = occurrences(skel)
    found = []
    for walk in trace_faces(skel):
        if len(walk) != 3 or len({ci for ci, _ in walk}) != 3:
            continue
        for ci, s in walk:
            _, t = other_end(occ, skel[ci][s], (ci, s))
            if s % 2 == t % 2:
                found.append(tuple(walk))
                break
    return found


def slide_triangle(skel, darts):
    """
    R3: every strand of the triangle trades its two external edges between
    its two triangle crossings.
    """
    occ = occurrences(skel)
    new = [list(t) for t in skel]
    for ci, s in darts:
        cj, t = other_end(occ, skel[ci][s], (ci, s))
        new[ci][(s + 2) % 4] = skel[cj][(t + 2) % 4]
        new[cj][(t + 2) % 4] = skel[ci][(s + 2) % 4]
    return new


# ============================================================================
# Moves on knot diagrams
# ============================================================================

def _lowest(d: PlanarDiagram, cells):
    return min(d.crossings[ci].labels[s] for ci, s in cells)


def r1_moves(d: PlanarDiagram) -> List[Tuple[int, int]]:
    """Kinks of ``d``, lowest loop label first."""
    found = kink_candidates(d.skeleton())
    return sorted(found, key=lambda m: (_lowest(d, [m]), m))


def apply_r1(d: PlanarDiagram, ci: int, s: int) -> Optional[PlanarDiagram]:
    """Remove the kink whose loop occupies slots s, s+1 of crossing ci."""
    rest, keep = remove_kink(d.skeleton(), ci, s)
    return _rebuild(d, rest, keep)


def r2_moves(d: PlanarDiagram) -> List[Tuple[int, int, int, int]]:
    """Removable bigons of ``d``, lowest boundary label first."""
    found = bigon_candidates(d.skeleton())
    return sorted(found, key=lambda m: (_lowest(d, [m[:2], m[2:]]), m))


def apply_r2(d: PlanarDiagram, x: int, sx: int, y: int, sy: int) -> Optional[PlanarDiagram]:
    rest, keep = remove_bigon(d.skeleton(), x, sx, y, sy)
    return _rebuild(d, rest, keep)


def r3_moves(d: PlanarDiagram) -> List[Tuple[Tuple[int, int], ...]]:
    """Triangles admitting an R3 slide, lowest boundary label first."""
    found = triangle_candidates(d.skeleton())
    return sorted(found, key=lambda m: (_lowest(d, m), m))


def apply_r3(d: PlanarDiagram, darts) -> Optional[PlanarDiagram]:
    new = slide_triangle(d.skeleton(), darts)
    return _rebuild(d, new, list(range(len(new))))



# ============================================================================
# Crossing-increasing moves
# ============================================================================

_KINKS = [(0, 1, 1, 2), (2, 1, 1, 0)]


def insert_r1(d: PlanarDiagram, arc: int, pattern: int, at_head: bool = False) -> Optional[PlanarDiagram]:
    """
    Add a kink on ``arc``. ``pattern`` (0..7) picks the rotation and which
    side of the new crossing the loop sits on.
    """
    base = _KINKS[(pattern // 4) % 2]
    rot = pattern % 4
    if not d.crossings:
        ids = {0: 1, 1: 2, 2: 1}
        x = [ids[base[(rot + r) % 4]] for r in range(4)]
        return _rebuild(d, [x], [])
    skel = [list(t) for t in d.skeleton()]
    near = d.heads[arc] if at_head else d.tails[arc]
    far = d.tails[arc] if at_head else d.heads[arc]
    loop, e2 = fresh_ids(skel, 2)
    skel[far[0]][far[1]] = e2
    ids = {0: arc, 1: loop, 2: e2}
    skel.append([ids[base[(rot + r) % 4]] for r in range(4)])
    return _rebuild(d, skel, list(range(d.n_crossings)))


def insert_r2(d: PlanarDiagram, face_index: int, arc_e: int, arc_f: int,
              e_over: bool) -> Optional[PlanarDiagram]:
    """Push a finger of ``arc_e`` across ``arc_f`` inside a common face."""
    if arc_e == arc_f or not d.crossings:
        return None
    face = faces(d)[face_index]
    a, b = face.step_of(arc_e)
    c, dd = face.step_of(arc_f)
    skel = [list(t) for t in d.skeleton()]
    e1, e2, f1, f2, e_mid, f_mid = fresh_ids(skel, 6)
    skel[a[0]][a[1]] = e1
    skel[b[0]][b[1]] = e2
    skel[dd[0]][dd[1]] = f1
    skel[c[0]][c[1]] = f2
    if e_over:
        skel.append([f1, e_mid, f_mid, e1])
        skel.append([f_mid, e_mid, f2, e2])
    else:
        skel.append([e_mid, f_mid, e1, f1])
        skel.append([e_mid, f2, e2, f_mid])
    return _rebuild(d, skel, list(range(d.n_crossings)))


def scramble(d: PlanarDiagram, rng: np.random.Generator, moves: int = 8,
             max_crossings: int = 16) -> PlanarDiagram:
    """
    Apply ``moves`` random Reidemeister moves (R1/R2 insertions and R3
    slides) keeping at most ``max_crossings`` crossings.
    """
    for _ in range(moves):
        kind = int(rng.integers(3))
        candidate = None
        if kind == 0 and d.n_crossings + 1 <= max_crossings:
            arc = int(rng.integers(1, d.n_arcs + 1)) if d.crossings else 1
            candidate = insert_r1(d, arc, int(rng.integers(8)), bool(rng.integers(2)))
        elif kind == 1 and d.crossings and d.n_crossings + 2 <= max_crossings:
            fs = faces(d)
            fi = int(rng.integers(len(fs)))
            arcs = fs[fi].arcs()
            if len(arcs) >= 2:
                i, j = rng.choice(len(arcs), size=2, replace=False)
                candidate = insert_r2(d, fi, arcs[int(i)], arcs[int(j)], bool(rng.integers(2)))
        elif kind == 2:
            options = r3_moves(d)
            if options:
                candidate = apply_r3(d, options[int(rng.integers(len(options)))])
        if candidate is not None:
            d = candidate
    return d


# ============================================================================
# Simplification
# ============================================================================

def _key(d: PlanarDiagram):
    """Diagram key invariant under cyclic relabelling."""
    n = d.n_arcs
    if n == 0:
        return ()
    best = None
    for shift in range(n):
        key = tuple(sorted(
            (tuple((a - 1 + shift) % n + 1 for a in x.labels), x.sign)
            for x in d.crossings))
        if best is None or key < best:
            best = key
    return best


def _reduce(d: PlanarDiagram) -> PlanarDiagram:
    """Greedy R1 then R2 removal until neither applies."""
    while d.crossings:
        nxt = None
        for ci, s in r1_moves(d):
            nxt = apply_r1(d, ci, s)
            if nxt is not None:
                break
        if nxt is None:
            for move in r2_moves(d):
                nxt = apply_r2(d, *move)
                if nxt is not None:
                    break
        if nxt is None:
            return d
        d = nxt
    return d


class _Search:
    def __init__(self, budget: SimplifyBudget):
        self.budget = budget
        self.explored = 0
        self.deadline = (time.monotonic() + budget.time_bound
                         if budget.time_bound is not None else None)

    def exhausted(self) -> bool:
        if self.explored > self.budget.max_crossings_explored:
            return True
        return self.deadline is not None and time.monotonic() > self.deadline


def _r3_descent(d: PlanarDiagram, search: _Search) -> Optional[PlanarDiagram]:
    """Breadth-first R3 search for a diagram that reduces below ``d``."""
    seen = {_key(d)}
    frontier = [d]
    for depth in range(search.budget.max_r3_moves):
        nxt = []
        for state in frontier:
            for darts in r3_moves(state):
                moved = apply_r3(state, darts)
                if moved is None:
                    continue
                key = _key(moved)
                if key in seen:
                    continue
                seen.add(key)
                search.explored += moved.n_crossings
                if search.exhausted():
                    logger.debug("R3 search budget exhausted at depth %d", depth)
                    return None
                reduced = _reduce(moved)
                if reduced.n_crossings < d.n_crossings:
                    return reduced
                nxt.append(moved)
        if not nxt:
            break
        frontier = nxt
    return None


def simplify(d: PlanarDiagram, budget: SimplifyBudget = DEFAULT_BUDGET) -> PlanarDiagram:
    """
    Reduce ``d`` by Reidemeister moves.

    Greedy R1/R2 removal (lowest label first) runs to a local minimum, then
    a breadth-first search over R3 slides looks for a diagram where R1 or R2
    applies again. Budget exhaustion returns the best diagram found.

    Args:
        d: diagram to simplify
        budget: search bounds

    Returns:
        Diagram with at most as many crossings as ``d``

    Example:
        >>> simplify(insert_r1(UNKNOT, 1, 0)).n_crossings
        0
    """
    search = _Search(budget)
    best = _reduce(d)
    while best.crossings and budget.max_r3_moves > 0 and not search.exhausted():
        improved = _r3_descent(best, search)
        if improved is None:
            break
        best = improved
    logger.debug("simplified %d -> %d crossings", d.n_crossings, best.n_crossings)
    return best


def is_unknot(d: PlanarDiagram, budget: SimplifyBudget = DEFAULT_BUDGET) -> UnknotVerdict:
    """
    YES when simplification reaches 0 crossings, NO when the determinant or
    Jones polynomial differs from the unknot's, UNKNOWN otherwise.
    """
    from strandtwist.invariants.bracket import DEFAULT_MAX_CROSSINGS, jones
    from strandtwist.invariants.goeritz import determinant

    if simplify(d, budget).n_crossings == 0:
        return UnknotVerdict.YES
    if determinant(d) != 1:
        return UnknotVerdict.NO
    if d.n_crossings <= DEFAULT_MAX_CROSSINGS and not jones(d).is_one():
        return UnknotVerdict.NO
    return UnknotVerdict.UNKNOWN
