"""
Twist Knot Families
===================

The clasp diagram and the twist knots obtained by twisting it.

This module defines:
- clasp_diagram: the two-crossing clasp (an unknot) with its twist site
- twist_family: T(m), the clasp twisted m times at its site
- twist_knot: the standard (k+2)-crossing twist knot T(k), k >= 1
- TwistFamilyParams / twist_family_case: the chirally cosmetic twist of
  order -(2k+1) turning T(k) into its mirror image T(-k-1)

Conventions: T(1) is the left-handed trefoil, T(2) the figure-eight,
T(-1) the unknot, T(-2) the right-handed trefoil and T(-3) the
figure-eight again.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

from strandtwist.diagram.skeleton import orient
from strandtwist.diagram.types import PlanarDiagram
from strandtwist.tangle.sites import TwistSite, site_between, twist_with_site


@lru_cache(maxsize=None)
def clasp_diagram() -> Tuple[PlanarDiagram, TwistSite]:
    """
    Two crossings x, y joined by a clasp, each carrying a loop (W at x,
    E at y). The site pairs the two loops on the outer face.
    """
    skel = [["p", "W", "W", "q"], ["E", "p", "q", "E"]]
    d, labels = orient(skel)
    site = site_between(d, labels["W"], labels["E"])
    assert site is not None, "clasp loops are not antiparallel"
    return d, site


def twist_family(m: int) -> PlanarDiagram:
    """T(m): the clasp twisted m times (T(0) is the clasp itself)."""
    d, site = clasp_diagram()
    if m == 0:
        return d
    return twist_with_site(d, site, m)[0]


def twist_knot(k: int) -> PlanarDiagram:
    """
    Standard twist knot with k + 2 crossings.

    Example:
        >>> twist_knot(1).n_crossings
        3
    """
    assert k >= 1, "twist knots are indexed from 1"
    return twist_family(k)


@dataclass(frozen=True)
class TwistFamilyParams:
    k: int
    n_twist: int

    def __post_init__(self):
        assert self.k >= 1, "k must be positive"
        assert self.n_twist == -(2 * self.k + 1), "twist must be -(2k+1)"

    @classmethod
    def for_index(cls, k: int) -> "TwistFamilyParams":
        return cls(k, -(2 * k + 1))


def twist_family_case(k: int) -> Tuple[PlanarDiagram, TwistSite, int]:
    """
    T(k), the site of its twist region and the twist -(2k+1) that turns it
    into its mirror image.
    """
    params = TwistFamilyParams.for_index(k)
    d, site = clasp_diagram()
    knot, induced = twist_with_site(d, site, params.k)
    return knot, induced, params.n_twist
