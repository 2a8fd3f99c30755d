"""Structured pass/fail records for theorem suites, JSON round-trippable.

A failed check always carries a witness.  Timing lives in its own field so
the rest of a report is deterministic for identical inputs; consumers that
checksum reports drop the timing key.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .errors import TheoremViolation
from .group import PermGroup
from .perm import Permutation

SCHEMA_VERSION = 1

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped-capacity"


def describe_perm(p: Permutation) -> str:
    return p.cycle_string()


def describe_group(G: PermGroup) -> dict:
    return {
        "name": G.name,
        "degree": G.degree,
        "order": G.order(),
        "generators": [g.cycle_string() for g in G.generators],
    }


@dataclass
class Check:
    check: str                      # stable identifier
    claim: str                      # the assertion, in words
    status: str                     # pass | fail | skipped-capacity
    witness: Optional[dict] = None  # serialized elements/subgroups on failure
    detail: Optional[dict] = None   # small context values (orders, counts)

    def to_dict(self) -> dict:
        out = {"check": self.check, "claim": self.claim, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail is not None:
            out["detail"] = self.detail
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "Check":
        return cls(check=d["check"], claim=d["claim"], status=d["status"],
                   witness=d.get("witness"), detail=d.get("detail"))


@dataclass
class VerificationReport:
    group: str
    suite: str
    checks: list = field(default_factory=list)
    engine: dict = field(default_factory=dict)
    timing: float = 0.0

    def add(self, check: str, claim: str, ok: bool,
            witness: Optional[dict] = None, detail: Optional[dict] = None):
        status = PASS if ok else FAIL
        if not ok and witness is None:
            witness = {"note": "no witness supplied"}
        self.checks.append(Check(check, claim, status, witness, detail))

    def skip(self, check: str, claim: str, detail: Optional[dict] = None):
        self.checks.append(Check(check, claim, SKIPPED, None, detail))

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    @property
    def skipped(self) -> bool:
        return any(c.status == SKIPPED for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if c.status == FAIL]

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "group": self.group,
            "suite": self.suite,
            "checks": [c.to_dict() for c in self.checks],
            "engine": self.engine,
            "timing": self.timing,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "VerificationReport":
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {d.get('schema_version')!r}")
        return cls(group=d["group"], suite=d["suite"],
                   checks=[Check.from_dict(c) for c in d["checks"]],
                   engine=d.get("engine", {}), timing=d.get("timing", 0.0))

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, **kw)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))


def require_ok(report: VerificationReport) -> VerificationReport:
    """Raise TheoremViolation if any check failed; returns the report."""
    bad = report.failures()
    if bad:
        first = bad[0]
        raise TheoremViolation(
            f"{report.suite}/{first.check} failed on {report.group}: {first.claim}",
            witness=first.witness)
    return report
