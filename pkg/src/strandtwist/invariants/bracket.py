"""
Kauffman Bracket and Jones Polynomial
=====================================

Bracket evaluation by crossing-by-crossing contraction, memoized over the
boundary matching of the partially resolved diagram.

This module defines:
- kauffman_bracket: <K> in the variable A, normalized so <O> = 1
- jones: V(t) = (-A^3)^(-w) <K> with t = A^(-4)
- writhe: sum of crossing signs
- state_sum_bracket: brute-force 2^c state sum (numba kernel), the
  independent oracle for the contraction

Smoothing convention: for a crossing (i, j, k, l) the A-smoothing joins
i-j and k-l, the B-smoothing joins j-k and l-i.
"""

import logging
from typing import Dict, FrozenSet, List, Tuple

import networkx as nx
import numpy as np
from numba import njit

from strandtwist.diagram.types import PlanarDiagram
from strandtwist.errors import ResourceExceeded
from strandtwist.invariants.laurent import LaurentPoly

logger = logging.getLogger(__name__)

DEFAULT_MAX_CROSSINGS = 24
MAX_STATE_SUM_CROSSINGS = 20

A_SMOOTHING = ((0, 1), (2, 3))
B_SMOOTHING = ((1, 2), (3, 0))

LOOP = LaurentPoly({2: -1, -2: -1})   # d = -A^2 - A^-2


def writhe(d: PlanarDiagram) -> int:
    return d.writhe()


def contraction_order(d: PlanarDiagram) -> List[int]:
    """
    Greedy order keeping the open boundary small: repeatedly take the
    crossing with the most arcs into the processed set, lowest index on ties.
    """
    g = nx.MultiGraph()
    g.add_nodes_from(range(d.n_crossings))
    owner: Dict[int, List[int]] = {}
    for ci, x in enumerate(d.crossings):
        for arc in x.labels:
            owner.setdefault(arc, []).append(ci)
    for a, b in owner.values():
        if a != b:
            g.add_edge(a, b)
    order = [0]
    done = {0}
    weight = {ci: 0 for ci in g.nodes}
    for nb in g.neighbors(0):
        weight[nb] += g.number_of_edges(0, nb)
    while len(order) < d.n_crossings:
        nxt = min((ci for ci in g.nodes if ci not in done), key=lambda ci: (-weight[ci], ci))
        order.append(nxt)
        done.add(nxt)
        for nb in set(g.neighbors(nxt)):
            weight[nb] += g.number_of_edges(nxt, nb)
    return order


Matching = FrozenSet[Tuple[int, int]]


def _join(match: Dict[int, int], u: int, v: int) -> int:
    """Connect the current halves of arcs u and v; return loops closed."""
    if u == v:
        return 1
    if match.get(u) == v:
        del match[u], match[v]
        return 1
    ends = []
    for label in (u, v):
        if label in match:
            far = match.pop(label)
            del match[far]
            ends.append(far)
        else:
            ends.append(label)
    a, b = ends
    if a == b:
        return 1
    match[a] = b
    match[b] = a
    return 0


def kauffman_bracket(d: PlanarDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> LaurentPoly:
    """
    Normalized Kauffman bracket.

    Args:
        d: diagram
        max_crossings: refuse larger diagrams

    Returns:
        <d> as a Laurent polynomial in A

    Raises:
        ResourceExceeded: d has more than ``max_crossings`` crossings
    """
    if d.n_crossings > max_crossings:
        raise ResourceExceeded(f"{d.n_crossings} crossings exceeds limit {max_crossings}")
    if not d.crossings:
        return LaurentPoly.constant(1)

    # state: (boundary matching, first loop closed) -> polynomial
    states: Dict[Tuple[Matching, bool], LaurentPoly] = {(frozenset(), False): LaurentPoly.constant(1)}
    for ci in contraction_order(d):
        labels = d.crossings[ci].labels
        nxt: Dict[Tuple[Matching, bool], LaurentPoly] = {}
        for (matching, closed), poly in states.items():
            for smoothing, power in ((A_SMOOTHING, 1), (B_SMOOTHING, -1)):
                match = {}
                for a, b in matching:
                    match[a] = b
                    match[b] = a
                loops = sum(_join(match, labels[s], labels[t]) for s, t in smoothing)
                value = poly.shift(power)
                flag = closed
                if loops and not flag:
                    flag = True
                    loops -= 1
                if loops:
                    value = value * LOOP ** loops
                key = (frozenset((a, b) for a, b in match.items() if a < b), flag)
                nxt[key] = nxt[key] + value if key in nxt else value
        states = nxt
        logger.debug("bracket: %d boundary states after crossing %d", len(states), ci)
    total = LaurentPoly()
    for (matching, closed), poly in states.items():
        assert not matching and closed, "contraction left open ends"
        total = total + poly
    return total


def jones(d: PlanarDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> LaurentPoly:
    """
    Jones polynomial in t = A^-4.

    Example:
        >>> from strandtwist.diagram import parse_pd
        >>> str(jones(parse_pd("X 1 4 2 5 X 3 6 4 1 X 5 2 6 3")))
        '-1*x^-4 + 1*x^-3 + 1*x^-1'
    """
    w = d.writhe()
    factor = LaurentPoly.monomial(-3 * w, -1 if w % 2 else 1)
    return (factor * kauffman_bracket(d, max_crossings)).divide_exponents(-4)


@njit(cache=True)
def _state_sum_kernel(edges, n_edges):
    c = edges.shape[0]
    total = 1 << c
    n_a = np.zeros(total, dtype=np.int64)
    loops = np.zeros(total, dtype=np.int64)
    parent = np.empty(n_edges, dtype=np.int64)
    for mask in range(total):
        for i in range(n_edges):
            parent[i] = i
        count_a = 0
        for ci in range(c):
            if (mask >> ci) & 1:
                count_a += 1
                pairs = ((0, 1), (2, 3))
            else:
                pairs = ((1, 2), (3, 0))
            for p in pairs:
                a = edges[ci, p[0]]
                while parent[a] != a:
                    a = parent[a]
                b = edges[ci, p[1]]
                while parent[b] != b:
                    b = parent[b]
                if a != b:
                    parent[a] = b
        comps = 0
        for i in range(n_edges):
            if parent[i] == i:
                comps += 1
        n_a[mask] = count_a
        loops[mask] = comps
    return n_a, loops


def state_sum_bracket(d: PlanarDiagram) -> LaurentPoly:
    """Bracket as the full state sum over all 2^c smoothings."""
    c = d.n_crossings
    if c > MAX_STATE_SUM_CROSSINGS:
        raise ResourceExceeded(f"state sum limited to {MAX_STATE_SUM_CROSSINGS} crossings")
    if c == 0:
        return LaurentPoly.constant(1)
    edges = np.array([[a - 1 for a in x.labels] for x in d.crossings], dtype=np.int64)
    n_a, loops = _state_sum_kernel(edges, d.n_arcs)
    counts: Dict[Tuple[int, int], int] = {}
    for a, l in zip(n_a.tolist(), loops.tolist()):
        key = (2 * a - c, l)
        counts[key] = counts.get(key, 0) + 1
    total = LaurentPoly()
    for (exp, l), mult in counts.items():
        total = total + LaurentPoly.monomial(exp, mult) * LOOP ** (l - 1)
    return total


def state_sum_jones(d: PlanarDiagram) -> LaurentPoly:
    w = d.writhe()
    factor = LaurentPoly.monomial(-3 * w, -1 if w % 2 else 1)
    return (factor * state_sum_bracket(d)).divide_exponents(-4)
