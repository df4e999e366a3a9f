"""
Knot diagrams: PD/DT codes, faces, Reidemeister moves and simplification.
"""

from strandtwist.diagram.types import Crossing, Face, PlanarDiagram, UnknotVerdict
from strandtwist.diagram.core import (
    UNKNOT, connected_sum, faces, format_pd, from_tuples, mirror, parse_pd,
)
from strandtwist.diagram.dt import dt_code, parse_dt
from strandtwist.diagram.moves import (
    apply_r1, apply_r2, apply_r3, insert_r1, insert_r2, is_unknot,
    r1_moves, r2_moves, r3_moves, scramble, simplify,
)

__all__ = [
    "Crossing", "Face", "PlanarDiagram", "UnknotVerdict", "UNKNOT",
    "parse_pd", "from_tuples", "format_pd", "faces", "mirror", "connected_sum",
    "parse_dt", "dt_code",
    "r1_moves", "r2_moves", "r3_moves", "apply_r1", "apply_r2", "apply_r3",
    "insert_r1", "insert_r2", "scramble", "simplify", "is_unknot",
]
