"""
Census Runner
=============

Enumerates (knot, site, twist) triples, evaluates them in a process pool
and streams records to a JSON-lines report through a single writer.

This module defines:
- CensusTask, evaluate_task: one unit of work and its evaluation
- census_tasks: deterministic task order
- census: the full run, resumable from a partial report
- read_records / write_summary: report I/O
"""

import csv
import json
import logging
import multiprocessing as mp
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator, List, Sequence, Set, Tuple, Union

from strandtwist.config import RunConfig
from strandtwist.diagram.core import format_pd, parse_pd
from strandtwist.diagram.types import PlanarDiagram
from strandtwist.census.records import CensusRecord, CensusVerdict
from strandtwist.errors import ResourceExceeded
from strandtwist.invariants.distinct import certify_distinct, digest
from strandtwist.tangle.certificates import CertificateStatus, nugatory_certificate
from strandtwist.tangle.sites import TwistSite, find_twist_sites, two_strand_twist

logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = ("source", "records") + tuple(v.value for v in CensusVerdict)


@dataclass(frozen=True)
class CensusTask:
    source: str
    pd: str
    site: str
    n: int
    max_crossings: int


@lru_cache(maxsize=64)
def _diagram(pd: str) -> PlanarDiagram:
    return parse_pd(pd)


@lru_cache(maxsize=64)
def _source_digest(pd: str, max_crossings: int):
    return digest(_diagram(pd), max_crossings).as_dict()


def evaluate_task(task: CensusTask) -> CensusRecord:
    """
    Twist and compare against the source. Resource limits end up in the
    record as an Unknown verdict.
    """
    d = _diagram(task.pd)
    site = TwistSite.parse(task.site)
    try:
        before = _source_digest(task.pd, task.max_crossings)
        twisted = two_strand_twist(d, site, task.n)
        after = digest(twisted, task.max_crossings).as_dict()
        if nugatory_certificate(d, site) is CertificateStatus.CERTIFIED:
            verdict, invariant = CensusVerdict.NUGATORY_CERTIFIED, None
        else:
            result = certify_distinct(d, twisted, task.max_crossings)
            if result.distinct:
                verdict, invariant = CensusVerdict.DISTINGUISHED_BY, result.invariant
            else:
                verdict, invariant = CensusVerdict.COSMETIC_CANDIDATE, None
    except ResourceExceeded as exc:
        return CensusRecord(task.source, task.site, task.n, CensusVerdict.UNKNOWN,
                            error=str(exc))
    return CensusRecord(task.source, task.site, task.n, verdict, invariant, before, after)


def census_tasks(diagrams: Sequence[Tuple[str, PlanarDiagram]], cfg: RunConfig) -> Iterator[CensusTask]:
    """Diagrams in input order, sites in ``find_twist_sites`` order, n ascending."""
    for name, d in diagrams:
        pd = format_pd(d)
        for site in find_twist_sites(d):
            for n in cfg.n_values():
                yield CensusTask(name, pd, site.address(), n, cfg.max_crossings)


def read_records(path: Union[str, Path]) -> List[CensusRecord]:
    """
    Records of a (possibly interrupted) report. A truncated last line is
    dropped and the file rewritten without it.
    """
    path = Path(path)
    if not path.exists():
        return []
    records, lines = [], []
    for line in path.read_text().splitlines():
        try:
            records.append(CensusRecord.from_dict(json.loads(line)))
        except (ValueError, KeyError):
            logger.warning("dropping unreadable report line in %s", path)
            break
        lines.append(line)
    path.write_text("".join(ln + "\n" for ln in lines))
    return records


def _labelled(diagrams) -> List[Tuple[str, PlanarDiagram]]:
    out = []
    for i, item in enumerate(diagrams):
        if isinstance(item, PlanarDiagram):
            out.append((f"knot#{i + 1}", item))
        else:
            out.append((str(item[0]), item[1]))
    return out


def census(diagrams: Iterable[Union[PlanarDiagram, Tuple[str, PlanarDiagram]]],
           cfg: RunConfig) -> List[CensusRecord]:
    """
    Run every twist of every site of every diagram.

    Args:
        diagrams: diagrams, bare or as (name, diagram) pairs
        cfg: twist range, limits, worker count, report path and resume flag

    Returns:
        Records in task order. With ``cfg.output_path`` set, each record is
        appended to the report as it completes; with ``cfg.resume`` the
        records already there are kept and their tasks skipped.
    """
    labelled = _labelled(diagrams)
    out_path = Path(cfg.output_path) if cfg.output_path else None
    done: List[CensusRecord] = []
    if out_path is not None and cfg.resume:
        done = read_records(out_path)
        logger.info("resuming census: %d records already in %s", len(done), out_path)
    elif out_path is not None:
        out_path.write_text("")
    skip: Set[Tuple[str, str, int]] = {r.key() for r in done}
    tasks = [t for t in census_tasks(labelled, cfg) if (t.source, t.site, t.n) not in skip]
    logger.info("census: %d diagrams, %d tasks to run", len(labelled), len(tasks))

    fresh: List[CensusRecord] = []
    sink = out_path.open("a") if out_path is not None else None
    try:
        if cfg.workers > 1 and len(tasks) > 1:
            with mp.Pool(processes=min(cfg.workers, len(tasks))) as pool:
                for record in pool.imap(evaluate_task, tasks, chunksize=4):
                    _emit(record, fresh, sink)
        else:
            for task in tasks:
                _emit(evaluate_task(task), fresh, sink)
    finally:
        if sink is not None:
            sink.close()

    records = done + fresh
    if out_path is not None:
        write_summary(records, out_path.with_suffix(".csv"))
    logger.info("census finished: %s", dict(Counter(r.verdict.value for r in records)))
    return records


def _emit(record: CensusRecord, fresh: List[CensusRecord], sink) -> None:
    fresh.append(record)
    if sink is not None:
        sink.write(record.to_json() + "\n")
        sink.flush()


def summary_rows(records: Sequence[CensusRecord]) -> List[dict]:
    rows = {}
    for r in records:
        row = rows.setdefault(r.source, {c: 0 for c in SUMMARY_COLUMNS})
        row["source"] = r.source
        row["records"] += 1
        row[r.verdict.value] += 1
    return list(rows.values())


def write_summary(records: Sequence[CensusRecord], path: Union[str, Path]) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.DictWriter(f, fieldnames=SUMMARY_COLUMNS)
        writer.writeheader()
        writer.writerows(summary_rows(records))


def cosmetic_candidates(records: Sequence[CensusRecord]) -> List[CensusRecord]:
    return [r for r in records if r.verdict is CensusVerdict.COSMETIC_CANDIDATE]
