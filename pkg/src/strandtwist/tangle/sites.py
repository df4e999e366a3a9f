"""
Two-Strand Twists
=================

Twist sites and the two-strand n-twist rewrite.

This module defines:
- TwistSite: two antiparallel arcs on a common face (plus a companion wrap)
- find_twist_sites: every site of a diagram
- braid_crossing / splice_braid: the local insertion template
- wind_wrap: the extra turns of a companion circle
- two_strand_twist, twist_with_site, compose_twists
- companion_site: the alternative twisting circle of an order-one twist
- orientation_extends: whether the twisted knot carries the old orientation

Insertion frame: the first arc's face step runs west to east along the top,
the second arc's step runs east to west along the bottom. Crossings
c_1..c_|n| are placed west to east. For n > 0 the strand running
south-west to north-east is over ("/" over) and the crossings are positive
on antiparallel strands; n < 0 mirrors every crossing.
"""

import logging
import re
from dataclasses import dataclass, replace
from typing import Dict, Hashable, List, Optional, Tuple

from strandtwist.diagram.core import faces
from strandtwist.diagram.skeleton import (
    fresh_ids, orient, start_from, strand_walk,
)
from strandtwist.diagram.types import Face, PlanarDiagram, Slot
from strandtwist.errors import InvalidSite, ZeroTwist

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TwistSite:
    """
    Attributes:
        arc_a, arc_b: the two arcs; oppositely oriented along the face
        face: index into ``faces(d)``
        wrap: full turns of the twisting circle around ``arc_a``'s strand
            (0 for the ordinary circle around the face arc, nonzero for
            companion circles)
    """

    arc_a: int
    arc_b: int
    face: int
    wrap: int = 0

    def address(self) -> str:
        text = f"site={self.arc_a},{self.arc_b},{self.face}"
        return text + (f",{self.wrap}" if self.wrap else "")

    @classmethod
    def parse(cls, text: str) -> "TwistSite":
        """Parse "site=a,b,face" (an optional fourth field is the wrap)."""
        values = [int(v) for v in re.findall(r"-?\d+", text.split("=", 1)[-1])]
        if len(values) not in (3, 4):
            raise InvalidSite(f"cannot parse site address {text!r}")
        return cls(*values)


@dataclass(frozen=True)
class Splice:
    """Where ``splice_braid`` put things: crossing indices and piece ids/slots."""

    first: int
    last: int
    pieces: Dict[str, Hashable]
    slots: Dict[str, int]


def _resolve(d: PlanarDiagram, s: TwistSite) -> Tuple[Face, int]:
    """Face of ``s`` and the common side of its arcs; raises InvalidSite."""
    fs = faces(d)
    if not 0 <= s.face < len(fs):
        raise InvalidSite(f"face {s.face} out of range 0..{len(fs) - 1}")
    if s.arc_a == s.arc_b:
        raise InvalidSite("site arcs must differ")
    face = fs[s.face]
    side_a, side_b = face.side_of(s.arc_a), face.side_of(s.arc_b)
    if not side_a or not side_b:
        raise InvalidSite(f"arcs {s.arc_a},{s.arc_b} do not both bound face {s.face}")
    if side_a != side_b:
        raise InvalidSite(f"arcs {s.arc_a},{s.arc_b} are parallel along face {s.face}")
    return face, side_a


def find_twist_sites(d: PlanarDiagram) -> List[TwistSite]:
    """
    All pairs of antiparallel arcs sharing a face, ordered by face index
    then arc labels.
    """
    sites = []
    for fi, face in enumerate(faces(d)):
        edges = sorted(face.edges)
        for i, (a, side_a) in enumerate(edges):
            for b, side_b in edges[i + 1:]:
                if side_a == side_b:
                    sites.append(TwistSite(a, b, fi))
    return sites


def braid_crossing(positive: bool, nw, sw, se, ne) -> Tuple:
    """
    One inserted crossing as a skeleton tuple (counterclockwise, under
    strand on slots 0 and 2). ``positive`` puts the SW-NE strand over.
    """
    return (nw, sw, se, ne) if positive else (sw, se, ne, nw)


def splice_braid(skel, A: Slot, B: Slot, C: Slot, D: Slot, n: int) -> Splice:
    """
    Insert |n| crossings between two face steps, in place.

    Args:
        skel: mutable skeleton
        A, B: leave and arrive slots of the first step (top, west to east)
        C, D: leave and arrive slots of the second step (bottom, east to west)
        n: nonzero twist amount

    Returns:
        Splice with the indices of the first and last new crossings and the
        ids and slots of the four boundary pieces e_W, e_E, f_W, f_E
    """
    m = abs(n)
    positive = n > 0
    ids = fresh_ids(skel, 2 * m + 2)
    e_w, e_e, f_w, f_e = ids[:4]
    top, bottom = ids[4:m + 3], ids[m + 3:]
    skel[A[0]][A[1]] = e_w
    skel[B[0]][B[1]] = e_e
    skel[D[0]][D[1]] = f_w
    skel[C[0]][C[1]] = f_e
    first = len(skel)
    for k in range(m):
        nw = e_w if k == 0 else top[k - 1]
        sw = f_w if k == 0 else bottom[k - 1]
        ne = e_e if k == m - 1 else top[k]
        se = f_e if k == m - 1 else bottom[k]
        skel.append(list(braid_crossing(positive, nw, sw, se, ne)))
    last = len(skel) - 1
    pieces = {"e_W": e_w, "e_E": e_e, "f_W": f_w, "f_E": f_e}
    slots = {
        "e_W": skel[first].index(e_w),
        "f_W": skel[first].index(f_w),
        "e_E": skel[last].index(e_e),
        "f_E": skel[last].index(f_e),
    }
    return Splice(first, last, pieces, slots)


def wind_wrap(skel, west: Tuple[Slot, Slot], east: Tuple[Slot, Slot], wrap: int) -> Splice:
    """
    Wind ``wrap`` full turns of a twisting circle around the first site
    strand, in place. ``west`` and ``east`` are the strand's two pieces on
    either side of the circle, each as a (leave, arrive) step on the face
    beyond the strand.
    """
    return splice_braid(skel, west[0], west[1], east[0], east[1], -2 * wrap)


def _twist_skeleton(d: PlanarDiagram, s: TwistSite, n: int):
    if n == 0:
        raise ZeroTwist("twist order must be nonzero")
    face, side = _resolve(d, s)
    A, B = face.step_of(s.arc_a)
    C, D = face.step_of(s.arc_b)
    skel = [list(x) for x in d.skeleton()]
    splice = splice_braid(skel, A, B, C, D, n)
    if s.wrap:
        # companion circle: wind the first strand's two pieces around each other
        wind_wrap(skel, ((splice.first, splice.slots["e_W"]), A),
                  (B, (splice.last, splice.slots["e_E"])), s.wrap)
    start = start_from(skel, d, {ci: ci for ci in range(d.n_crossings)})
    if start is None:
        start = (splice.first, splice.slots["e_W"]) if side > 0 else A
    return skel, splice, side, start, (A, B, C, D)


def two_strand_twist(d: PlanarDiagram, s: TwistSite, n: int) -> PlanarDiagram:
    """
    Insert |n| half twists between the two strands of site ``s``.

    Args:
        d: knot diagram
        s: valid site of ``d``
        n: nonzero twist amount; the sign picks the handedness

    Returns:
        One-component diagram with c + |n| crossings (plus 2|wrap| for
        companion sites)

    Raises:
        ZeroTwist: n == 0
        InvalidSite: arcs not co-facial or not antiparallel

    Example:
        >>> from strandtwist.tangle.families import clasp_diagram
        >>> d, site = clasp_diagram()
        >>> two_strand_twist(d, site, 2).n_crossings
        4
    """
    skel, _, _, start, _ = _twist_skeleton(d, s, n)
    result, _ = orient(skel, start)
    assert result.n_crossings == d.n_crossings + abs(n) + 2 * abs(s.wrap)
    logger.debug("twist %s by %d: %d -> %d crossings", s.address(), n,
                 d.n_crossings, result.n_crossings)
    return result


def site_between(d: PlanarDiagram, a: int, b: int) -> Optional[TwistSite]:
    """First face where arcs a and b are antiparallel, as a site."""
    for fi, face in enumerate(faces(d)):
        side_a, side_b = face.side_of(a), face.side_of(b)
        if side_a and side_a == side_b:
            return TwistSite(min(a, b), max(a, b), fi)
    return None


def twist_with_site(d: PlanarDiagram, s: TwistSite, n: int) -> Tuple[PlanarDiagram, TwistSite]:
    """
    Twist and return the induced site: the same two strands, just east of
    the inserted crossings, where further twists extend the same braid.
    """
    if s.wrap:
        raise InvalidSite("induced sites are tracked for plain sites only")
    skel, splice, _, start, _ = _twist_skeleton(d, s, n)
    result, labels = orient(skel, start)
    induced = site_between(result, labels[splice.pieces["e_E"]], labels[splice.pieces["f_E"]])
    assert induced is not None, "induced site lost"
    return result, induced


def compose_twists(d: PlanarDiagram, s: TwistSite, n: int, m: int) -> PlanarDiagram:
    """Twist by n at ``s`` and then by m at the induced site."""
    if n == 0:
        return two_strand_twist(d, s, m) if m else d
    first, induced = twist_with_site(d, s, n)
    return two_strand_twist(first, induced, m) if m else first


def companion_site(d: PlanarDiagram, s: TwistSite, sign: int = -1) -> TwistSite:
    """
    Site of the companion twisting circle: the circle obtained from the
    site's circle by one full turn (direction ``sign``) around the first
    strand. An order-one twist of sign -sign along it reproduces the
    order-one twist of sign ``sign`` along ``s``; applying the companion
    with the opposite sign returns ``s``.
    """
    if sign not in (1, -1):
        raise InvalidSite("companion sign must be +1 or -1")
    _resolve(d, s)
    return replace(s, wrap=s.wrap + sign)


def orientation_extends(d: PlanarDiagram, s: TwistSite, n: int) -> bool:
    """
    True when the twisted diagram admits an orientation agreeing with ``d``
    on every untouched arc and on the four cut pieces of the site arcs.
    """
    if s.wrap:
        raise InvalidSite("orientation check is defined for plain sites")
    skel, splice, side, start, (A, B, C, D) = _twist_skeleton(d, s, n)
    heads = {skel[ci][si]: (ci, si) for ci, si in strand_walk(skel, start)}
    agree = [heads[arc] == d.heads[arc] for arc in d.heads
             if arc not in (s.arc_a, s.arc_b)]
    first = lambda name: (splice.first, splice.slots[name])  # noqa: E731
    last = lambda name: (splice.last, splice.slots[name])  # noqa: E731
    expected = {
        "e_W": first("e_W") if side > 0 else A,
        "e_E": B if side > 0 else last("e_E"),
        "f_W": D if side > 0 else first("f_W"),
        "f_E": last("f_E") if side > 0 else C,
    }
    agree += [heads[splice.pieces[name]] == slot for name, slot in expected.items()]
    return all(agree) or not any(agree)
