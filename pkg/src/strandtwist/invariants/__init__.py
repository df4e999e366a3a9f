"""
Knot invariants: Kauffman bracket, Jones polynomial, Goeritz matrix,
determinant and the homology of the double branched cover.
"""

from strandtwist.invariants.laurent import LaurentPoly
from strandtwist.invariants.bracket import (
    jones, kauffman_bracket, state_sum_bracket, state_sum_jones, writhe,
)
from strandtwist.invariants.smith import AbelianGroup, SmithNormalForm, smith_normal_form
from strandtwist.invariants.goeritz import (
    GoeritzData, branched_cover_homology, determinant, goeritz,
)
from strandtwist.invariants.distinct import (
    Distinctness, InvariantDigest, certify_distinct, digest,
)

__all__ = [
    "LaurentPoly",
    "kauffman_bracket", "jones", "writhe", "state_sum_bracket", "state_sum_jones",
    "AbelianGroup", "SmithNormalForm", "smith_normal_form",
    "GoeritzData", "goeritz", "determinant", "branched_cover_homology",
    "Distinctness", "InvariantDigest", "certify_distinct", "digest",
]
