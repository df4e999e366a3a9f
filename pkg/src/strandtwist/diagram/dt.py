"""
Dowker-Thistlethwaite Codes
===========================

Realize DT codes as planar diagrams and read them back.

This module defines:
- parse_dt: DT sequence -> PlanarDiagram
- dt_code: PlanarDiagram -> DT sequence

Passages along the knot are numbered 1..2c; the k-th entry pairs passage
2k-1 with passage |a_k|. A positive entry means the odd passage goes
under, a negative one that it goes over, so alternating knots have all
entries positive.
"""

import itertools
import logging
import re
from typing import Sequence, Tuple, Union

from strandtwist.diagram.skeleton import is_planar, orient
from strandtwist.diagram.types import PlanarDiagram
from strandtwist.errors import MalformedCode, ResourceExceeded, Unrealizable

logger = logging.getLogger(__name__)

MAX_DT_CROSSINGS = 16


def _read(code) -> Tuple[int, ...]:
    if isinstance(code, str):
        code = [int(tok) for tok in re.findall(r"-?\d+", code)]
    return tuple(int(v) for v in code)


def _crossing(o: int, e: int, odd_under: bool, eps: int, n: int):
    def in_edge(p):
        return n if p == 1 else p - 1

    o_in, o_out, e_in, e_out = in_edge(o), o, in_edge(e), e
    ring = [o_in, e_in, o_out, e_out] if eps > 0 else [o_in, e_out, o_out, e_in]
    if odd_under:
        return ring
    u = ring.index(e_in)
    return ring[u:] + ring[:u]


def parse_dt(code: Union[str, Sequence[int]]) -> PlanarDiagram:
    """
    Realize a DT code.

    Each crossing's handedness (which side the even passage comes from) is
    searched, the first crossing fixed, until the Euler count F = c + 2
    certifies a planar embedding.

    Args:
        code: even integers, or a comma separated string of them

    Returns:
        PlanarDiagram whose arc k leaves passage k

    Raises:
        MalformedCode: not a permutation of the even passages, or an entry
            pairing two consecutive passages (a kink)
        Unrealizable: no handedness choice is planar
        ResourceExceeded: more than MAX_DT_CROSSINGS crossings

    Example:
        >>> parse_dt((4, 6, 2)).n_crossings
        3
    """
    entries = _read(code)
    c = len(entries)
    if c == 0:
        return PlanarDiagram(())
    n = 2 * c
    if any(a == 0 or a % 2 for a in entries):
        raise MalformedCode(f"DT entries must be nonzero even integers: {entries}")
    if sorted(abs(a) for a in entries) != list(range(2, n + 1, 2)):
        raise MalformedCode(f"DT entries are not a permutation of 2..{n}: {entries}")
    for k, a in enumerate(entries):
        gap = (abs(a) - (2 * k + 1)) % n
        if gap in (1, n - 1):
            raise MalformedCode(f"entry {a} pairs consecutive passages")
    if c > MAX_DT_CROSSINGS:
        raise ResourceExceeded(f"DT realization limited to {MAX_DT_CROSSINGS} crossings")

    for tail in itertools.product((1, -1), repeat=c - 1):
        eps = (1,) + tail
        skel = [_crossing(2 * k + 1, abs(a), a > 0, eps[k], n)
                for k, a in enumerate(entries)]
        if not is_planar(skel):
            continue
        start = next((ci, s) for ci, x in enumerate(skel)
                     for s, e in enumerate(x)
                     if e == 1 and x[(s + 2) % 4] == 2)
        d, _ = orient(skel, start)
        logger.debug("realized DT %s with handedness %s", entries, eps)
        return d
    raise Unrealizable(f"DT code {entries} has no planar realization")


def dt_code(d: PlanarDiagram) -> Tuple[int, ...]:
    """
    DT code of ``d`` read from its arc labels (passage k is where arc k
    starts).
    """
    pairs = {}
    for x in d.crossings:
        under, over = x.labels[2], x.labels[x.over_out_slot]
        if under % 2 == over % 2:
            raise MalformedCode("crossing pairs two passages of equal parity")
        if under % 2:
            pairs[under] = over
        else:
            pairs[over] = -under
    return tuple(pairs[o] for o in sorted(pairs))
