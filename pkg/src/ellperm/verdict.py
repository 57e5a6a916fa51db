"""Structured verdicts: the unit of output of the verification harness.

A verdict records one checked claim: its id, a self-contained statement of
the identity under test, the parameters of the run, and exact evidence.
Evidence items are plain dicts with a "kind" key:

  kind="discrepancy"   a concrete instance where the claim fails
                       (counterexample permutation, difference polynomial,
                       mismatching values, measured disagreement index)
  kind="measurement"   supporting data recorded for the report that does not
                       by itself falsify the claim (trend rows, measured
                       agreement orders for passing instances)

Status is fully determined by the instance bookkeeping:

  pass     no instance failed
  fail     every tested instance failed
  partial  some instances hold and some fail

so two runs with the same parameters always produce the same verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_PARTIAL = "partial"


@dataclass(frozen=True)
class ClaimVerdict:
    claim_id: str
    statement: str
    group: str
    parameters: Mapping[str, Any] = field(default_factory=dict)
    status: str = STATUS_PASS
    instances_total: int = 0
    instances_failed: int = 0
    evidence: tuple[dict, ...] = ()

    def as_dict(self) -> dict:
        """Stable field order for serialization."""
        return {
            "claim_id": self.claim_id,
            "statement": self.statement,
            "group": self.group,
            "parameters": dict(self.parameters),
            "status": self.status,
            "instances_total": self.instances_total,
            "instances_failed": self.instances_failed,
            "evidence": [dict(item) for item in self.evidence],
        }


def discrepancy(**payload: Any) -> dict:
    return {"kind": "discrepancy", **payload}


def measurement(**payload: Any) -> dict:
    return {"kind": "measurement", **payload}


def build_verdict(
    claim_id: str,
    statement: str,
    group: str,
    parameters: Mapping[str, Any],
    instances_total: int,
    instances_failed: int,
    evidence: tuple[dict, ...] | list[dict] = (),
) -> ClaimVerdict:
    if instances_failed == 0:
        status = STATUS_PASS
    elif instances_failed >= instances_total:
        status = STATUS_FAIL
    else:
        status = STATUS_PARTIAL
    return ClaimVerdict(
        claim_id=claim_id,
        statement=statement,
        group=group,
        parameters=dict(parameters),
        status=status,
        instances_total=instances_total,
        instances_failed=instances_failed,
        evidence=tuple(evidence),
    )
