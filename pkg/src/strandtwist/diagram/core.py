"""
Diagram Core
============

Parsing, validation and the basic constructors for knot diagrams.

This module defines:
- parse_pd / from_tuples: PD text or tuples -> validated PlanarDiagram
- format_pd: PlanarDiagram -> PD text ("X a b c d" lines)
- faces: the complementary regions of a diagram
- mirror, connected_sum
"""

import logging
import re
from typing import Iterable, List, Sequence, Union

from strandtwist.diagram.skeleton import orient, strand_walk, trace_faces
from strandtwist.diagram.types import Crossing, Face, PlanarDiagram
from strandtwist.errors import Disconnected, MalformedCode, OrientationInconsistent

logger = logging.getLogger(__name__)

_INT = re.compile(r"-?\d+")

UNKNOT = PlanarDiagram(())


def _tokenize(text: str) -> List[int]:
    values = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        values.extend(int(tok) for tok in _INT.findall(line))
    return values


def parse_pd(text: Union[str, Iterable[Sequence[int]]]) -> PlanarDiagram:
    """
    Parse and validate a PD code.

    Accepts "X a b c d" lines, "X[a,b,c,d]" lists or any whitespace/comma
    separated run of integers taken four at a time; '#' starts a comment.
    A sequence of 4-tuples is accepted as well.

    Args:
        text: PD text or tuples

    Returns:
        Validated PlanarDiagram with orientation inferred from label succession

    Raises:
        MalformedCode: arity or duplication violations, or a non-planar code
        Disconnected: more than one component
        OrientationInconsistent: labels do not increase along the strands

    Example:
        >>> parse_pd("X 1 4 2 5\\nX 3 6 4 1\\nX 5 2 6 3").n_crossings
        3
    """
    if isinstance(text, str):
        values = _tokenize(text)
        if len(values) % 4:
            raise MalformedCode(f"{len(values)} labels is not a multiple of 4")
        tuples = [tuple(values[i:i + 4]) for i in range(0, len(values), 4)]
    else:
        tuples = [tuple(int(v) for v in t) for t in text]
        if any(len(t) != 4 for t in tuples):
            raise MalformedCode("every crossing needs four labels")
    return from_tuples(tuples)


def from_tuples(tuples: Sequence[Sequence[int]]) -> PlanarDiagram:
    """Validate PD 4-tuples; see ``parse_pd``."""
    c = len(tuples)
    if c == 0:
        return UNKNOT
    n = 2 * c
    counts = {}
    for t in tuples:
        for label in t:
            if label < 1 or label > n:
                raise MalformedCode(f"label {label} outside 1..{n}")
            counts[label] = counts.get(label, 0) + 1
    bad = sorted(k for k in range(1, n + 1) if counts.get(k, 0) != 2)
    if bad:
        raise MalformedCode(f"labels not used exactly twice: {bad}")

    skel = [list(t) for t in tuples]
    if len(strand_walk(skel, (0, 0))) != n:
        raise Disconnected("PD code has more than one component")

    def succ(a):
        return a % n + 1

    # heads: every arc enters exactly one crossing
    heads = {}
    pending = []
    for ci, (i, j, k, l) in enumerate(tuples):
        if k != succ(i):
            raise OrientationInconsistent(f"under-strand {i}->{k} at crossing {ci}")
        heads.setdefault(i, []).append(ci)
        fwd, bwd = j == succ(l), l == succ(j)
        if fwd and bwd:
            pending.append(ci)
        elif fwd:
            heads.setdefault(l, []).append(ci)
        elif bwd:
            heads.setdefault(j, []).append(ci)
        else:
            raise OrientationInconsistent(f"over-strand {j},{l} at crossing {ci}")
    signs = {}
    for ci in pending:
        _, j, _, l = tuples[ci]
        signs[ci] = 1 if l not in heads else -1
        heads.setdefault(l if signs[ci] > 0 else j, []).append(ci)
    if any(len(heads.get(k, ())) != 1 for k in range(1, n + 1)):
        raise OrientationInconsistent("an arc has no unique head")

    crossings = []
    for ci, (i, j, k, l) in enumerate(tuples):
        sign = signs.get(ci, 1 if j == succ(l) else -1)
        crossings.append(Crossing((i, j, k, l), sign))
    d = PlanarDiagram(tuple(crossings))
    if len(trace_faces(skel)) != c + 2:
        raise MalformedCode("PD code is not planar")
    return d


def format_pd(d: PlanarDiagram) -> str:
    """PD text, one "X a b c d" line per crossing."""
    return "\n".join("X {} {} {} {}".format(*x.labels) for x in d.crossings)


def faces(d: PlanarDiagram) -> List[Face]:
    """
    Faces of ``d`` in a deterministic order.

    The 0-crossing unknot has two empty faces; otherwise the list has
    c + 2 entries.
    """
    if not d.crossings:
        return [Face((), ()), Face((), ())]
    skel = d.skeleton()
    result = []
    for walk in trace_faces(skel):
        edges = []
        for ci, s in walk:
            arc = skel[ci][s]
            edges.append((arc, 1 if d.tails[arc] == (ci, s) else -1))
        result.append(Face(tuple(edges), tuple(walk)))
    assert len(result) == d.n_crossings + 2, "Euler check failed"
    return result


def mirror(d: PlanarDiagram) -> PlanarDiagram:
    """
    Swap over and under at every crossing. Arc labels and their
    orientation are unchanged; every sign flips.
    """
    flipped = []
    for x in d.crossings:
        i, j, k, l = x.labels
        labels = (l, i, j, k) if x.sign > 0 else (j, k, l, i)
        flipped.append(Crossing(labels, -x.sign))
    return PlanarDiagram(tuple(flipped))


def connected_sum(d1: PlanarDiagram, d2: PlanarDiagram) -> PlanarDiagram:
    """
    Connected sum: cut the last arc of each diagram and reconnect the ends
    across. The result has c1 + c2 crossings.
    """
    if not d1.crossings:
        return d2
    if not d2.crossings:
        return d1
    n1, n2 = d1.n_arcs, d2.n_arcs
    skel = [[("a", e) for e in x] for x in d1.skeleton()]
    skel += [[("b", e) for e in x] for x in d2.skeleton()]
    h1 = d1.heads[n1]
    h2 = d2.heads[n2]
    h2 = (h2[0] + d1.n_crossings, h2[1])
    skel[h1[0]][h1[1]] = ("b", n2)
    skel[h2[0]][h2[1]] = ("a", n1)
    start = d1.heads[1]
    result, _ = orient(skel, start)
    logger.debug("connected sum of %d and %d crossings", d1.n_crossings, d2.n_crossings)
    return result
