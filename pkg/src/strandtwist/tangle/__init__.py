"""
Tangle surgery: two-strand twists, band surgery, companion circles and
the twist-knot family.
"""

from strandtwist.tangle.sites import (
    TwistSite, braid_crossing, companion_site, compose_twists, find_twist_sites,
    orientation_extends, site_between, splice_braid, twist_with_site, two_strand_twist,
    wind_wrap,
)
from strandtwist.tangle.bands import Band, band_surgery, band_to_site, trivial_band
from strandtwist.tangle.certificates import (
    CertificateStatus, companion_unlinking_certificate, nugatory_certificate,
)
from strandtwist.tangle.families import (
    TwistFamilyParams, clasp_diagram, twist_family, twist_family_case, twist_knot,
)

__all__ = [
    "TwistSite", "find_twist_sites", "braid_crossing", "splice_braid", "wind_wrap",
    "two_strand_twist", "twist_with_site", "compose_twists", "companion_site",
    "orientation_extends", "site_between",
    "Band", "band_surgery", "band_to_site", "trivial_band",
    "CertificateStatus", "nugatory_certificate", "companion_unlinking_certificate",
    "TwistFamilyParams", "clasp_diagram", "twist_family", "twist_knot",
    "twist_family_case",
]
