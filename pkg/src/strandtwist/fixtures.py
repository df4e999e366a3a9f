"""
Builtin Knots and Worked Examples
=================================

Named diagrams and the worked twisting examples used by the checks.

This module defines:
- TREFOIL_PD, FIGURE_EIGHT_PD and ``builtin(name)``
- clasp_case / clasp_band: the clasp unknot and its order-one cosmetic twist
- trivial_band_case: the trivial band beside a kink
- figure_eight_case: the figure-eight twisted by -5 along its twist region
- mirror_family_case: T(k) twisted by -(2k+1) into its mirror image
"""

from typing import Dict, Optional, Tuple

from strandtwist.diagram.core import UNKNOT, parse_pd
from strandtwist.diagram.dt import parse_dt
from strandtwist.diagram.types import PlanarDiagram
from strandtwist.errors import FixtureMissing, KnotEngineError
from strandtwist.tangle.bands import Band, trivial_band
from strandtwist.tangle.families import clasp_diagram, twist_family_case, twist_knot
from strandtwist.tangle.sites import TwistSite

# left-handed trefoil, writhe -3
TREFOIL_PD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIGURE_EIGHT_PD = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"

_DT = {
    "5_1": "6 8 10 2 4",
    "5_2": "4 8 10 2 6",
    "6_1": "4 8 12 10 2 6",
    "6_2": "4 8 10 12 2 6",
    "6_3": "4 8 10 2 12 6",
}


def builtin(name: str) -> PlanarDiagram:
    """
    Look up a named knot: "unknot", "trefoil", "figure-eight", "clasp",
    "twist:k" or a small Rolfsen name such as "5_2".

    Raises:
        FixtureMissing: unknown name or a construction that failed
    """
    key = name.strip().lower()
    try:
        if key in ("unknot", "0_1"):
            return UNKNOT
        if key in ("trefoil", "3_1"):
            return parse_pd(TREFOIL_PD)
        if key in ("figure-eight", "figure8", "4_1"):
            return parse_pd(FIGURE_EIGHT_PD)
        if key == "clasp":
            return clasp_diagram()[0]
        if key.startswith("twist:"):
            return twist_knot(int(key.split(":", 1)[1]))
        if key in _DT:
            return parse_dt(_DT[key])
    except (KnotEngineError, ValueError, AssertionError) as exc:
        raise FixtureMissing(f"fixture {name!r} could not be built: {exc}") from exc
    raise FixtureMissing(f"no builtin knot named {name!r}")


def builtin_names() -> Tuple[str, ...]:
    return ("unknot", "trefoil", "figure-eight", "clasp", "twist:k") + tuple(_DT)


# ============================================================================
# Worked examples
# ============================================================================

CLASP_TWISTS = (-1, 2, -3)


def clasp_case() -> Tuple[PlanarDiagram, TwistSite]:
    """The clasp: an unknot whose site twisted by -1 stays an unknot."""
    return clasp_diagram()


def clasp_band() -> Tuple[PlanarDiagram, Band]:
    """The band whose surgery is the -1 twist of ``clasp_case``."""
    d, site = clasp_diagram()
    return d, Band(site.arc_a, site.arc_b, site.face, -1)


def trivial_band_case(d: Optional[PlanarDiagram] = None, arc: int = 1) -> Tuple[PlanarDiagram, Band]:
    """Trivial band on ``d`` (default: the figure-eight)."""
    d = d if d is not None else parse_pd(FIGURE_EIGHT_PD)
    return trivial_band(d, arc)


def figure_eight_case() -> Tuple[PlanarDiagram, TwistSite, int]:
    """Figure-eight, the site of its twist region, and the twist -5."""
    knot, site, _ = twist_family_case(2)
    return knot, site, -5


def mirror_family_case(k: int) -> Tuple[PlanarDiagram, TwistSite, int]:
    return twist_family_case(k)


def worked_examples() -> Dict[str, object]:
    """The cases ``verify_worked_examples`` checks, keyed by example."""
    return {
        "clasp": clasp_band(),
        "trivial-band": trivial_band_case(),
        "figure-eight": figure_eight_case(),
        "mirror-family": [mirror_family_case(k) for k in range(1, 6)],
    }
