"""
strandtwist - two-strand twists on knot diagrams

Twist and band rewrites on planar diagrams, the invariants used to tell
the results apart (Jones polynomial, determinant, double branched cover
homology), slope arithmetic for the lifted surgery, and homology-level
monodromy checks.

Example:
    >>> import strandtwist as st
    >>> d, site = st.clasp_diagram()
    >>> st.determinant(st.two_strand_twist(d, site, 2))
    5
"""

__version__ = "0.1.0"

from strandtwist.diagram import (
    UNKNOT, PlanarDiagram, UnknotVerdict, connected_sum, dt_code, faces,
    format_pd, is_unknot, mirror, parse_dt, parse_pd, simplify,
)
from strandtwist.invariants import (
    branched_cover_homology, certify_distinct, determinant, goeritz, jones,
    kauffman_bracket, writhe,
)
from strandtwist.tangle import (
    Band, TwistSite, band_surgery, band_to_site, clasp_diagram, companion_site,
    compose_twists, find_twist_sites, twist_family_case, twist_knot, two_strand_twist,
)

__all__ = [
    "UNKNOT", "PlanarDiagram", "UnknotVerdict",
    "parse_pd", "parse_dt", "dt_code", "format_pd", "faces", "mirror",
    "connected_sum", "simplify", "is_unknot",
    "kauffman_bracket", "jones", "writhe", "goeritz", "determinant",
    "branched_cover_homology", "certify_distinct",
    "TwistSite", "Band", "find_twist_sites", "two_strand_twist", "compose_twists",
    "band_surgery", "band_to_site", "companion_site", "clasp_diagram",
    "twist_knot", "twist_family_case",
    "__version__",
]
