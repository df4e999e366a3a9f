"""
Knot Table Ingestion
====================

Reads knot tables as (name, diagram) pairs.

Two formats are accepted:

PD tables hold one knot per block; blocks are separated by blank lines and
may start with a ``# name`` header::

    # 3_1
    X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]

DT tables hold one knot per line, optionally named ``name: code``::

    4_1: 4 6 8 2
"""

import logging
import re
from pathlib import Path
from typing import List, Tuple, Union

from strandtwist.diagram.core import parse_pd
from strandtwist.diagram.dt import parse_dt
from strandtwist.diagram.types import PlanarDiagram
from strandtwist.errors import MalformedCode

logger = logging.getLogger(__name__)

Table = List[Tuple[str, PlanarDiagram]]

_PD_MARK = re.compile(r"X\[|^\s*X\s+-?\d", re.IGNORECASE | re.MULTILINE)


def parse_table(text: str, stem: str = "knot") -> Table:
    """Parse table text; unnamed entries are called ``stem#i``."""
    if _PD_MARK.search(text):
        return _parse_pd_blocks(text, stem)
    return _parse_dt_lines(text, stem)


def _parse_pd_blocks(text: str, stem: str) -> Table:
    table = []
    for block in text.split("\n\n"):
        lines = [ln.strip() for ln in block.strip().splitlines() if ln.strip()]
        if not lines:
            continue
        name = f"{stem}#{len(table) + 1}"
        if lines[0].startswith("#"):
            name = lines.pop(0).lstrip("#").strip() or name
        if not lines:
            raise MalformedCode(f"table entry {name!r} has no PD code")
        table.append((name, parse_pd(" ".join(lines))))
    return table


def _parse_dt_lines(text: str, stem: str) -> Table:
    table = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        name = f"{stem}#{len(table) + 1}"
        if ":" in line:
            name, line = (part.strip() for part in line.split(":", 1))
        table.append((name, parse_dt(line)))
    return table


def load_table(path: Union[str, Path]) -> Table:
    """
    Raises:
        MalformedCode: (and the other code errors) for a bad entry
        OSError: unreadable file
    """
    path = Path(path)
    table = parse_table(path.read_text(), path.stem)
    logger.info("loaded %d knots from %s", len(table), path)
    return table
