"""
Goeritz Matrix and Double Branched Cover
========================================

Checkerboard data of a diagram and the invariants it presents.

This module defines:
- GoeritzData: shading choice plus full and reduced Goeritz matrices
- goeritz: checkerboard-color the faces and build the matrix
- determinant: |det| of the reduced Goeritz matrix
- branched_cover_homology: H1 of the double branched cover via Smith form
"""

import logging
from dataclasses import dataclass
from typing import Tuple

import networkx as nx
import sympy

from strandtwist.diagram.core import faces
from strandtwist.diagram.types import PlanarDiagram
from strandtwist.invariants.smith import AbelianGroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GoeritzData:
    """
    Attributes:
        shaded: indices (into ``faces(d)``) of the shaded faces, ascending
        unbounded: index of the face taken as unbounded
        matrix: full symmetric Goeritz matrix over the shaded faces
        reduced: ``matrix`` with row and column 0 deleted
    """

    shaded: Tuple[int, ...]
    unbounded: int
    matrix: Tuple[Tuple[int, ...], ...]
    reduced: Tuple[Tuple[int, ...], ...]


def _checkerboard(fs):
    g = nx.Graph()
    g.add_nodes_from(range(len(fs)))
    by_arc = {}
    for fi, face in enumerate(fs):
        for arc in face.arcs():
            by_arc.setdefault(arc, []).append(fi)
    for a, b in by_arc.values():
        g.add_edge(a, b)
    return nx.bipartite.color(g)


def _reduced(matrix, drop: int):
    keep = [i for i in range(len(matrix)) if i != drop]
    return tuple(tuple(matrix[i][j] for j in keep) for i in keep)


def _det(rows) -> int:
    if not rows:
        return 1
    return int(sympy.Matrix(rows).det(method="bareiss"))


def goeritz(d: PlanarDiagram) -> GoeritzData:
    """
    Goeritz matrix of ``d``.

    The largest face (lowest index on ties) is treated as unbounded and the
    color class not containing it is shaded. At a crossing whose shaded
    corners are the sectors (0,1) and (2,3) the index is +1, otherwise -1;
    off-diagonal entries are minus the summed indices between two shaded
    faces and each row sums to zero.
    """
    fs = faces(d)
    if not d.crossings:
        return GoeritzData((1,), 0, ((0,),), ())
    color = _checkerboard(fs)
    unbounded = max(range(len(fs)), key=lambda fi: (len(fs[fi]), -fi))
    shaded = tuple(fi for fi in range(len(fs)) if color[fi] != color[unbounded])
    index = {fi: k for k, fi in enumerate(shaded)}

    corner = {}
    for fi, face in enumerate(fs):
        for ci, s in face.darts:
            corner[(ci, s)] = fi

    size = len(shaded)
    matrix = [[0] * size for _ in range(size)]
    for ci in range(d.n_crossings):
        if corner[(ci, 1)] in index:
            eta, f1, f2 = 1, corner[(ci, 1)], corner[(ci, 3)]
        else:
            eta, f1, f2 = -1, corner[(ci, 0)], corner[(ci, 2)]
        if f1 == f2:
            continue
        i, j = index[f1], index[f2]
        matrix[i][j] -= eta
        matrix[j][i] -= eta
    for i in range(size):
        matrix[i][i] = -sum(matrix[i][j] for j in range(size) if j != i)
    full = tuple(tuple(row) for row in matrix)
    return GoeritzData(shaded, unbounded, full, _reduced(full, 0))


def determinant(d: PlanarDiagram) -> int:
    """
    Knot determinant |det G|.

    Example:
        >>> from strandtwist.diagram import parse_dt
        >>> determinant(parse_dt("4, 6, 8, 2"))
        5
    """
    data = goeritz(d)
    value = abs(_det(data.reduced))
    if len(data.matrix) > 1:
        check = abs(_det(_reduced(data.matrix, len(data.matrix) - 1)))
        assert check == value, "Goeritz determinant depends on the deleted index"
    return value


def branched_cover_homology(d: PlanarDiagram) -> AbelianGroup:
    """First homology of the double branched cover, presented by Goeritz."""
    data = goeritz(d)
    group = AbelianGroup.presented_by(data.reduced, len(data.reduced))
    logger.debug("H1 of double cover: %s", group)
    return group
