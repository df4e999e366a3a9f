"""
Census Records
==============

One record per (knot, site, twist) triple, serialized as a JSON line.

This module defines:
- SCHEMA_VERSION
- CensusVerdict: CosmeticCandidate / DistinguishedBy / NugatoryCertified / Unknown
- CensusRecord: the record itself, with JSON round trip and summary label
"""

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional, Tuple

SCHEMA_VERSION = 1


class CensusVerdict(Enum):
    """
    COSMETIC_CANDIDATE: every computed invariant matched; never a proof of
    isotopy. DISTINGUISHED_BY: a named invariant differs.
    """

    COSMETIC_CANDIDATE = "CosmeticCandidate"
    DISTINGUISHED_BY = "DistinguishedBy"
    NUGATORY_CERTIFIED = "NugatoryCertified"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class CensusRecord:
    source: str
    site: str
    n: int
    verdict: CensusVerdict
    invariant: Optional[str] = None
    input_digest: Optional[Dict[str, Any]] = None
    output_digest: Optional[Dict[str, Any]] = None
    error: Optional[str] = None
    schema: int = field(default=SCHEMA_VERSION)

    def __post_init__(self):
        assert self.n != 0, "census twists are nonzero"
        if self.verdict is CensusVerdict.DISTINGUISHED_BY:
            assert self.invariant, "DistinguishedBy needs the differing invariant"
        if self.verdict is CensusVerdict.COSMETIC_CANDIDATE:
            assert self.invariant is None and self.input_digest == self.output_digest, \
                "a cosmetic candidate cannot carry a differing invariant"

    def key(self) -> Tuple[str, str, int]:
        return self.source, self.site, self.n

    def label(self) -> str:
        if self.verdict is CensusVerdict.DISTINGUISHED_BY:
            return f"{self.verdict.value}({self.invariant})"
        return self.verdict.value

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": self.schema,
            "source": self.source,
            "site": self.site,
            "n": self.n,
            "verdict": self.verdict.value,
            "invariant": self.invariant,
            "input": self.input_digest,
            "output": self.output_digest,
            "error": self.error,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CensusRecord":
        return cls(
            source=data["source"],
            site=data["site"],
            n=int(data["n"]),
            verdict=CensusVerdict(data["verdict"]),
            invariant=data.get("invariant"),
            input_digest=data.get("input"),
            output_digest=data.get("output"),
            error=data.get("error"),
            schema=int(data.get("schema", SCHEMA_VERSION)),
        )
