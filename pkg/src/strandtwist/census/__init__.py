"""
Census harness: twist enumeration, worked-example checks and reports.
"""

from strandtwist.census.records import SCHEMA_VERSION, CensusRecord, CensusVerdict
from strandtwist.census.tables import load_table, parse_table
from strandtwist.census.runner import (
    CensusTask, census, census_tasks, cosmetic_candidates, evaluate_task,
    read_records, write_summary,
)
from strandtwist.census.checks import (
    BandingKind, BandingVerdict, Claim, Report, check_banding,
    random_unknot_bandings, theorem3_check, unknot_banding_check, verify_paper_examples,
    verify_worked_examples,
)

__all__ = [
    "SCHEMA_VERSION", "CensusRecord", "CensusVerdict",
    "load_table", "parse_table",
    "CensusTask", "census", "census_tasks", "cosmetic_candidates", "evaluate_task",
    "read_records", "write_summary",
    "BandingKind", "BandingVerdict", "Claim", "Report", "check_banding",
    "random_unknot_bandings", "unknot_banding_check", "verify_worked_examples",
    "verify_paper_examples", "theorem3_check",
]
