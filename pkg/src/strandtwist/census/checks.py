"""
Worked-Example and Order-One Checks
===================================

This module defines:
- Claim / Report: pass/fail lines with details
- verify_worked_examples: the worked twisting examples (clasp unknot,
  trivial band, figure-eight -5 twist, twist knots into their mirrors)
- BandingVerdict / unknot_banding_check: every cosmetic order-one twist
  on the unknot is checked for an opposite-sign companion twist
- random_unknot_bandings: bandings on scrambled unknot diagrams

Invariants refute isotopy but never prove it, so "cosmetic" results are
candidates and the order-one check is a consistency check, not a proof.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from strandtwist.config import DEFAULT_BUDGET, SimplifyBudget
from strandtwist.diagram.core import UNKNOT, parse_pd
from strandtwist.diagram.moves import is_unknot, scramble
from strandtwist.diagram.types import PlanarDiagram, UnknotVerdict
from strandtwist.errors import FixtureMissing, KnotEngineError, NotUnknot
from strandtwist.fixtures import CLASP_TWISTS, FIGURE_EIGHT_PD, worked_examples
from strandtwist.invariants.bracket import jones
from strandtwist.invariants.distinct import digest
from strandtwist.tangle.bands import Band, band_surgery, band_to_site
from strandtwist.tangle.certificates import (
    CertificateStatus, companion_unlinking_certificate, nugatory_certificate,
)
from strandtwist.tangle.sites import companion_site, find_twist_sites, two_strand_twist

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Claim:
    name: str
    passed: bool
    detail: str = ""

    def as_dict(self) -> Dict[str, object]:
        return {"claim": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class Report:
    title: str
    claims: List[Claim] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def add(self, name: str, passed: bool, detail: str = "") -> Claim:
        claim = Claim(name, bool(passed), detail)
        self.claims.append(claim)
        logger.debug("%s: %s %s", name, "pass" if passed else "FAIL", detail)
        return claim

    def lines(self) -> List[str]:
        out = [self.title]
        out += [f"  [{'PASS' if c.passed else 'FAIL'}] {c.name}" + (f": {c.detail}" if c.detail else "")
                for c in self.claims]
        return out


def _check(report: Report, name: str, test: Callable[[], Tuple[bool, str]]) -> None:
    try:
        passed, detail = test()
    except KnotEngineError as exc:
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    report.add(name, passed, detail)


def verify_worked_examples(budget: SimplifyBudget = DEFAULT_BUDGET) -> Report:
    """
    Run every worked example and return one claim per statement.

    Raises:
        FixtureMissing: an example diagram could not be built
    """
    try:
        cases = worked_examples()
        clasp, band = cases["clasp"]
        site = band_to_site(clasp, band)
        eight = parse_pd(FIGURE_EIGHT_PD)
        band_knot, trivial = cases["trivial-band"]
        eight_knot, eight_site, eight_n = cases["figure-eight"]
        family = cases["mirror-family"]
    except (KnotEngineError, AssertionError) as exc:
        raise FixtureMissing(f"worked example unavailable: {exc}") from exc

    report = Report("worked twisting examples (cosmetic results are candidates)")
    v8 = jones(eight)
    twisted = {n: two_strand_twist(clasp, site, n) for n in CLASP_TWISTS}

    _check(report, "clasp: clasp diagram is an unknot",
           lambda: (is_unknot(clasp, budget) is UnknotVerdict.YES, ""))
    _check(report, "clasp: -1 twist is an unknot",
           lambda: (is_unknot(twisted[-1], budget) is UnknotVerdict.YES,
                    f"{twisted[-1].n_crossings} crossings before simplification"))
    for n in CLASP_TWISTS[1:]:
        _check(report, f"clasp: {n} twist has the figure-eight Jones polynomial",
               lambda n=n: (jones(twisted[n]) in (v8, v8.invert()), jones(twisted[n]).format("t")))

    companion = companion_site(clasp, site, -1)
    _check(report, "clasp: -1 twist matches +1 twist along the companion circle",
           lambda: (jones(two_strand_twist(clasp, companion, 1)) == jones(twisted[-1]), ""))
    _check(report, "clasp: companion circle is unlinked from the knot",
           lambda: (companion_unlinking_certificate(clasp, companion, budget)
                    is CertificateStatus.CERTIFIED, ""))

    _check(report, "trivial band: trivial band is nugatory",
           lambda: (nugatory_certificate(band_knot, band_to_site(band_knot, trivial))
                    is CertificateStatus.CERTIFIED, ""))
    _check(report, "trivial band: band surgery leaves the invariants fixed",
           lambda: (digest(band_surgery(band_knot, trivial)) == digest(band_knot), ""))

    _check(report, "figure-eight: fixture is the figure-eight",
           lambda: (jones(eight_knot) == v8, ""))
    _check(report, f"figure-eight: {eight_n} twist keeps the figure-eight Jones polynomial",
           lambda: (jones(two_strand_twist(eight_knot, eight_site, eight_n)) == v8, ""))

    for k, (knot, s, n) in enumerate(family, start=1):
        _check(report, f"twist family: k={k}, {n} twist mirrors T({k})",
               lambda knot=knot, s=s, n=n: (
                   jones(two_strand_twist(knot, s, n)) == jones(knot).invert(),
                   jones(knot).format("t")))
    return report


# ============================================================================
# Order-one twists on the unknot
# ============================================================================

class BandingKind(Enum):
    NUGATORY_CERTIFIED = "NugatoryCertified"
    WEAKLY_NUGATORY = "WeaklyNugatory"
    NOT_COSMETIC = "NotCosmetic"
    UNDETERMINED = "Undetermined"
    COUNTEREXAMPLE = "Counterexample"


@dataclass(frozen=True)
class BandingVerdict:
    index: int
    kind: BandingKind
    disk_condition: Optional[CertificateStatus] = None
    detail: str = ""

    @property
    def counterexample(self) -> bool:
        return self.kind is BandingKind.COUNTEREXAMPLE

    def as_dict(self) -> Dict[str, object]:
        return {
            "index": self.index,
            "verdict": self.kind.value,
            "companion_disk": self.disk_condition.value if self.disk_condition else None,
            "detail": self.detail,
        }


def check_banding(index: int, d: PlanarDiagram, band: Band,
                  budget: SimplifyBudget = DEFAULT_BUDGET) -> BandingVerdict:
    """
    Classify one banding of an unknot diagram.

    Raises:
        NotUnknot: ``d`` is not certified to be an unknot
    """
    if is_unknot(d, budget) is not UnknotVerdict.YES:
        raise NotUnknot(f"banding {index}: input diagram is not certified unknot")
    site = band_to_site(d, band)
    if nugatory_certificate(d, site) is CertificateStatus.CERTIFIED:
        return BandingVerdict(index, BandingKind.NUGATORY_CERTIFIED)
    out = band_surgery(d, band)
    outcome = is_unknot(out, budget)
    if outcome is UnknotVerdict.NO:
        return BandingVerdict(index, BandingKind.NOT_COSMETIC)
    if outcome is UnknotVerdict.UNKNOWN:
        return BandingVerdict(index, BandingKind.UNDETERMINED, detail="surgery output not certified")
    companion = companion_site(d, site, band.half_twist)
    matched = digest(two_strand_twist(d, companion, -band.half_twist)) == digest(out)
    disk = companion_unlinking_certificate(d, companion, budget)
    if not matched:
        return BandingVerdict(index, BandingKind.COUNTEREXAMPLE, disk,
                              "companion twist of opposite sign differs")
    return BandingVerdict(index, BandingKind.WEAKLY_NUGATORY, disk)


def unknot_banding_check(bandings: Sequence[Tuple[PlanarDiagram, Band]],
                   budget: SimplifyBudget = DEFAULT_BUDGET) -> Tuple[Report, List[BandingVerdict]]:
    """
    Consistency check of "every cosmetic order-one twist on the unknot is
    weakly nugatory" over the given bandings.

    For each banding whose surgery is certified unknot, the opposite-sign
    twist along the companion circle must give an invariant-identical knot;
    whether that circle bounds a disk is reported as Certified or
    Unverified.

    Raises:
        NotUnknot: an input diagram fails certification
    """
    verdicts = [check_banding(i, d, b, budget) for i, (d, b) in enumerate(bandings)]
    counts: Dict[str, int] = {}
    for v in verdicts:
        counts[v.kind.value] = counts.get(v.kind.value, 0) + 1
    report = Report("order-one twists on the unknot (consistency check)")
    report.add("no counterexample records", not any(v.counterexample for v in verdicts),
               ", ".join(f"{k}={c}" for k, c in sorted(counts.items())))
    for v in verdicts:
        if v.kind is BandingKind.WEAKLY_NUGATORY:
            report.add(f"banding {v.index}: companion identity holds", True,
                       f"companion disk {v.disk_condition.value}")
        elif v.counterexample:
            report.add(f"banding {v.index}: companion identity", False, v.detail)
    return report, verdicts


def random_unknot_bandings(count: int, rng: np.random.Generator, moves: int = 6,
                           max_crossings: int = 10,
                           budget: SimplifyBudget = DEFAULT_BUDGET) -> List[Tuple[PlanarDiagram, Band]]:
    """
    ``count`` bandings on scrambled unknot diagrams; diagrams the
    simplifier cannot certify are skipped.
    """
    out: List[Tuple[PlanarDiagram, Band]] = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        assert attempts <= 50 * count + 100, "could not generate enough bandings"
        d = scramble(UNKNOT, rng, moves, max_crossings)
        sites = find_twist_sites(d) if d.crossings else []
        if not sites or is_unknot(d, budget) is not UnknotVerdict.YES:
            continue
        s = sites[int(rng.integers(len(sites)))]
        out.append((d, Band(s.arc_a, s.arc_b, s.face, int(rng.choice([-1, 1])))))
    logger.debug("%d bandings from %d attempts", count, attempts)
    return out


# earlier names, matching the verify-paper and theorem3-check commands
verify_paper_examples = verify_worked_examples
theorem3_check = unknot_banding_check
