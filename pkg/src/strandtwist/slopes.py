"""
Surgery Slopes on the Lifted Arc
================================

Slope arithmetic on the boundary torus of the lifted twisting arc's
exterior in the double branched cover.

An n-twist along a site lifts to a Dehn surgery on the preimage of the
twisting arc. In the basis (meridian, surface longitude) of that torus the
surgery slope is (1, n). A twist can only leave the cover unchanged if some
filling meeting both the meridian and the surgery slope once restores the
ambient manifold; every other filling adds a lens space summand.

This module defines:
- TorusSlope, SurgeryContext
- delta: minimal geometric intersection number of two slopes
- surgery_slope, unit_intersectors, filling_classification
- nugatory_slope_test: forced-nugatory versus weakly-nugatory-only
- crossing_circle_slope, lens_orders, slope_table

Conclusions assume the lifted arc is unknotted in the cover; every report
carries ``assumes_unknotted_lift``.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from typing import Dict, Iterable, List, Tuple

from strandtwist.errors import DegenerateSlope, ZeroTwist

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class TorusSlope:
    """
    p meridians plus q longitudes, normalized so that p >= 0 and q = 1 when
    p = 0. Use ``TorusSlope.of`` to build from arbitrary coprime pairs.
    """

    p: int
    q: int

    def __post_init__(self):
        assert gcd(self.p, self.q) == 1, f"slope ({self.p},{self.q}) is not primitive"
        assert self.p > 0 or (self.p == 0 and self.q == 1), \
            f"slope ({self.p},{self.q}) is not normalized"

    @classmethod
    def of(cls, p: int, q: int) -> "TorusSlope":
        """
        Raises:
            DegenerateSlope: (0, 0) or a non-primitive pair
        """
        if p == 0 and q == 0:
            raise DegenerateSlope("(0,0) is not a slope")
        if gcd(p, q) != 1:
            raise DegenerateSlope(f"({p},{q}) is not primitive")
        if p < 0 or (p == 0 and q < 0):
            p, q = -p, -q
        return cls(p, q)

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


MERIDIAN = TorusSlope(1, 0)
LONGITUDE = TorusSlope(0, 1)


def delta(a: TorusSlope, b: TorusSlope) -> int:
    """
    Example:
        >>> delta(MERIDIAN, TorusSlope(1, 5))
        5
    """
    return abs(a.p * b.q - a.q * b.p)


@dataclass(frozen=True)
class SurgeryContext:
    """The torus basis of a twist of order ``n`` and its surgery slope."""

    n: int
    meridian: TorusSlope = field(default=MERIDIAN)
    seifert_longitude: TorusSlope = field(default=LONGITUDE)

    def __post_init__(self):
        assert self.n != 0, "twist order must be nonzero"
        assert delta(self.meridian, self.seifert_longitude) == 1, \
            "meridian and longitude must form a basis"

    @property
    def mu_prime(self) -> TorusSlope:
        return surgery_slope(self.n)


def surgery_slope(n: int) -> TorusSlope:
    """
    Slope of the lifted surgery: 1/n with respect to the surface framing.

    Raises:
        ZeroTwist: n == 0
    """
    if n == 0:
        raise ZeroTwist("a zero twist has no surgery slope")
    return TorusSlope.of(1, n)


def unit_intersectors(mu_prime: TorusSlope) -> List[TorusSlope]:
    """
    All slopes meeting both the meridian and ``mu_prime`` exactly once,
    sorted.

    A slope meeting the meridian once is (0, 1) or (a, +-1) with a > 0;
    meeting (p', q') once then means q' * a = p' * e -+ 1, which has at most
    four solutions.

    Raises:
        DegenerateSlope: ``mu_prime`` is the meridian (every (a, +-1) qualifies)
    """
    if mu_prime.q == 0:
        raise DegenerateSlope("the meridian meets infinitely many slopes once")
    found = set()
    for e in (1, -1):
        for t in (1, -1):
            num = mu_prime.p * e - t
            if num % mu_prime.q == 0 and num // mu_prime.q >= 0:
                found.add(TorusSlope.of(num // mu_prime.q, e))
    result = sorted(s for s in found
                    if delta(MERIDIAN, s) == 1 and delta(mu_prime, s) == 1)
    return result


class FillingKind(Enum):
    RESTORES_AMBIENT = "RestoresAmbient"
    LENS_SUMMAND = "LensSummand"


@dataclass(frozen=True)
class Filling:
    kind: FillingKind
    order: int

    @property
    def reducible(self) -> bool:
        """Order 0: the filling is the disk slope itself (an S1 x S2 summand)."""
        return self.order == 0

    def __str__(self) -> str:
        if self.kind is FillingKind.RESTORES_AMBIENT:
            return self.kind.value
        return f"{self.kind.value}({self.order})"


def filling_classification(filling: TorusSlope, disk_slope: TorusSlope) -> Filling:
    order = delta(filling, disk_slope)
    if order == 1:
        return Filling(FillingKind.RESTORES_AMBIENT, 1)
    return Filling(FillingKind.LENS_SUMMAND, order)


class NugatoryClass(Enum):
    FORCED_NUGATORY = "ForcedNugatory"
    WEAKLY_NUGATORY_ONLY = "WeaklyNugatoryOnly"


def nugatory_slope_test(n: int) -> NugatoryClass:
    """
    A cosmetic twist with |n| >= 2 must be nugatory; with |n| = 1 only weak
    nugatoriness follows.

    For |n| > 2 the longitude is the only slope meeting both the meridian
    and the surgery slope once, so the twisting circle bounds a disk. The
    case |n| = 2 has a second such slope and is settled by the crossing
    change argument instead.

    Raises:
        ZeroTwist: n == 0
    """
    mu_prime = surgery_slope(n)
    if abs(n) >= 2:
        assert abs(n) == 2 or unit_intersectors(mu_prime) == [LONGITUDE]
        return NugatoryClass.FORCED_NUGATORY
    return NugatoryClass.WEAKLY_NUGATORY_ONLY


# ============================================================================
# Tables
# ============================================================================

def crossing_circle_slope(n: int) -> TorusSlope:
    """
    For even n the twist is n/2 full twists, i.e. -2/n surgery on the
    twisting circle itself (in the circle's own meridian/longitude basis).

    Raises:
        ZeroTwist: n == 0
        DegenerateSlope: odd n (not a surgery on the circle)
    """
    if n == 0:
        raise ZeroTwist("a zero twist has no surgery slope")
    if n % 2:
        raise DegenerateSlope(f"an odd twist ({n}) is not a surgery on the twisting circle")
    return TorusSlope.of(-1, n // 2)


def lens_orders(n: int, a: int) -> Tuple[int, int]:
    """Intersection of the surgery slope with (a, +1) and (a, -1): |1 - na|, |1 + na|."""
    mu_prime = surgery_slope(n)
    return delta(mu_prime, TorusSlope.of(a, 1)), delta(mu_prime, TorusSlope.of(a, -1))


SLOPE_COLUMNS = ("n", "mu_prime", "delta", "unit_intersectors", "classification",
                 "assumes_unknotted_lift")


def slope_row(n: int) -> Dict[str, object]:
    mu_prime = surgery_slope(n)
    return {
        "n": n,
        "mu_prime": str(mu_prime),
        "delta": delta(MERIDIAN, mu_prime),
        "unit_intersectors": " ".join(str(s) for s in unit_intersectors(mu_prime)),
        "classification": nugatory_slope_test(n).value,
        "assumes_unknotted_lift": True,
    }


def slope_table(ns: Iterable[int]) -> List[Dict[str, object]]:
    """Rows for each nonzero n, in the order given."""
    rows = [slope_row(n) for n in ns if n != 0]
    logger.debug("slope table with %d rows", len(rows))
    return rows


if __name__ == "__main__":
    for row in slope_table(range(-6, 7)):
        print(row)
