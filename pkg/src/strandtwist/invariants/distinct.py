"""
Distinctness Certificates
=========================

Compare two diagrams by invariants.

This module defines:
- InvariantDigest: determinant, double-cover homology and Jones of a diagram
- Distinctness: verdict of ``certify_distinct``
- digest, certify_distinct
"""

from dataclasses import dataclass
from typing import Dict, Optional

from strandtwist.diagram.types import PlanarDiagram
from strandtwist.invariants.bracket import DEFAULT_MAX_CROSSINGS, jones
from strandtwist.invariants.goeritz import branched_cover_homology, determinant

INVARIANT_ORDER = ("determinant", "homology", "jones")


@dataclass(frozen=True)
class InvariantDigest:
    determinant: int
    homology: str
    jones: str

    def as_dict(self) -> Dict[str, object]:
        return {"determinant": self.determinant, "homology": self.homology, "jones": self.jones}


@dataclass(frozen=True)
class Distinctness:
    """
    ``distinct`` is True with ``invariant`` naming the first differing
    invariant and ``left``/``right`` its two values; otherwise the diagrams
    are indistinguishable by the invariants computed.
    """

    distinct: bool
    invariant: Optional[str] = None
    left: Optional[str] = None
    right: Optional[str] = None

    def __str__(self) -> str:
        if not self.distinct:
            return "Indistinguishable"
        return f"Distinct({self.invariant}: {self.left} vs {self.right})"


def digest(d: PlanarDiagram, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> InvariantDigest:
    return InvariantDigest(
        determinant=determinant(d),
        homology=str(branched_cover_homology(d)),
        jones=jones(d, max_crossings).format("t"),
    )


def certify_distinct(d1: PlanarDiagram, d2: PlanarDiagram,
                     max_crossings: int = DEFAULT_MAX_CROSSINGS) -> Distinctness:
    """
    Look for an invariant separating ``d1`` and ``d2``, cheapest first.

    Raises:
        ResourceExceeded: from the Jones evaluation

    Example:
        >>> from strandtwist.diagram import UNKNOT, parse_dt
        >>> str(certify_distinct(UNKNOT, parse_dt("4 6 8 2")))
        'Distinct(determinant: 1 vs 5)'
    """
    det1, det2 = determinant(d1), determinant(d2)
    if det1 != det2:
        return Distinctness(True, "determinant", str(det1), str(det2))
    h1, h2 = branched_cover_homology(d1), branched_cover_homology(d2)
    if h1 != h2:
        return Distinctness(True, "homology", str(h1), str(h2))
    j1, j2 = jones(d1, max_crossings), jones(d2, max_crossings)
    if j1 != j2:
        return Distinctness(True, "jones", j1.format("t"), j2.format("t"))
    return Distinctness(False)
