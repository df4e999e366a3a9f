"""
Band Surgery
============

Non-coherent bands along a face and their order-one twist realization.

This module defines:
- Band: two attaching arcs on a common face and the band's half-twist
- band_to_site: the twist site whose twisting arc is the band's core
- band_surgery: surgery along a band, realized as an order-one twist
- trivial_band: a band cobounded with a kink, whose surgery changes nothing

Bands run along an embedded path inside one face. A band attached to two
arcs that run antiparallel along the face with no half twist is coherent
(surgery yields a two-component link) and is rejected; a band with one half
twist gives back a knot, namely the order-one twist at the same place.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Tuple

from strandtwist.diagram.core import UNKNOT, faces
from strandtwist.diagram.moves import insert_r1
from strandtwist.diagram.skeleton import fresh_ids, orient, start_from
from strandtwist.diagram.types import PlanarDiagram
from strandtwist.errors import CoherentBand, InvalidSite
from strandtwist.tangle.sites import TwistSite, two_strand_twist

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Band:
    """
    Attributes:
        arc_a, arc_b: attaching arcs, both on ``face``
        face: index into ``faces(d)``
        half_twist: -1, 0 or 1; the sign is the handedness of the half twist
    """

    arc_a: int
    arc_b: int
    face: int
    half_twist: int = -1

    def __post_init__(self):
        assert self.half_twist in (-1, 0, 1), "half_twist must be -1, 0 or 1"
        assert self.arc_a != self.arc_b, "a band needs two distinct arcs"

    @property
    def half_twist_parity(self) -> int:
        return self.half_twist % 2

    def to_record(self) -> Dict[str, int]:
        return {"arc_a": self.arc_a, "arc_b": self.arc_b, "face": self.face,
                "half_twist": self.half_twist}

    @classmethod
    def from_record(cls, record: Dict[str, int]) -> "Band":
        return cls(int(record["arc_a"]), int(record["arc_b"]), int(record["face"]),
                   int(record.get("half_twist", -1)))


def band_to_site(d: PlanarDiagram, b: Band) -> TwistSite:
    """
    The twist site carried by a band: same face, same arcs. The twisting
    circle links the band's core once.

    Raises:
        InvalidSite: arcs not on the face, or parallel along it
    """
    fs = faces(d)
    if not 0 <= b.face < len(fs):
        raise InvalidSite(f"face {b.face} out of range 0..{len(fs) - 1}")
    side_a, side_b = fs[b.face].side_of(b.arc_a), fs[b.face].side_of(b.arc_b)
    if not side_a or not side_b:
        raise InvalidSite(f"band arcs {b.arc_a},{b.arc_b} are not on face {b.face}")
    if side_a != side_b:
        raise InvalidSite("parallel attachments are not supported; the band "
                          "would need to cross itself")
    return TwistSite(min(b.arc_a, b.arc_b), max(b.arc_a, b.arc_b), b.face)


def band_surgery(d: PlanarDiagram, b: Band) -> PlanarDiagram:
    """
    Surgery along ``b``.

    Raises:
        CoherentBand: the band has no half twist, so the result is a link
        InvalidSite: see ``band_to_site``
    """
    site = band_to_site(d, b)
    if b.half_twist_parity == 0:
        raise CoherentBand(f"band on arcs {b.arc_a},{b.arc_b} is coherent")
    logger.debug("band surgery at %s, half twist %d", site.address(), b.half_twist)
    return two_strand_twist(d, site, b.half_twist)


def trivial_band(d: PlanarDiagram, arc: int, half_twist: int = -1) -> Tuple[PlanarDiagram, Band]:
    """
    Add a kink on ``arc`` and return the band joining the strand just
    before the kink to the strand just after it, across the corner outside
    the loop. Surgery along it is isotopic to the identity.

    The returned diagram is isotopic to ``d`` (one extra crossing).

    Example:
        >>> k, band = trivial_band(UNKNOT, 1)
        >>> k.n_crossings
        2
    """
    if not d.crossings:
        d = insert_r1(UNKNOT, 1, 0)
    if arc not in d.heads:
        raise InvalidSite(f"arc {arc} not in diagram")
    skel = [list(x) for x in d.skeleton()]
    loop, after = fresh_ids(skel, 2)
    head = d.heads[arc]
    skel[head[0]][head[1]] = after
    k = len(skel)
    skel.append([arc, loop, loop, after])
    start = start_from(skel, d, {ci: ci for ci in range(d.n_crossings)}) or (k, 0)
    result, labels = orient(skel, start)
    face = next(fi for fi, f in enumerate(faces(result)) if (k, 0) in f.darts)
    band = Band(labels[arc], labels[after], face, half_twist)
    return result, band
