"""Request/response models for the service and the JSON report schema (v1).

Every rational travels as an exact "numerator/denominator" string
(integers included, e.g. "-1/1"), never as a float, so re-parsing with
Fraction reproduces the exact value.  The check response is the stable
v1 report shape also emitted by the CLI's --json mode:

    {"verdict": "psd|not_psd|inconclusive", "depth": int,
     "witness": {"path": [[int...]...], "point": ["num/den"...], "value": "num/den"}?,
     "necessary": {"holds": bool, "violations": [{"term": [int...], "ordering": [int...]}...]}?,
     "stats": {...}}
"""

from __future__ import annotations

from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, Field


def fraction_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


class CheckRequest(BaseModel):
    form: str
    matrix: str = "an"  # "an" | "gn" | "q=r1,r2,..."
    max_depth: int = Field(default=6, ge=0)
    node_budget: int = Field(default=1_000_000, ge=1)
    check_necessary: bool = False
    dedup: bool = True


class WitnessReport(BaseModel):
    path: list[list[int]]
    point: list[str]
    value: str


class ViolationReport(BaseModel):
    term: list[int]
    ordering: list[int]


class NecessaryReport(BaseModel):
    holds: bool
    violations: list[ViolationReport]


class StatsReport(BaseModel):
    nodes_expanded: int
    trivially_positive_pruned: int
    dedup_hits: int
    max_frontier_size: int
    budget_exceeded: bool


class CheckResponse(BaseModel):
    verdict: Literal["psd", "not_psd", "inconclusive"]
    depth: int
    witness: WitnessReport | None = None
    necessary: NecessaryReport | None = None
    stats: StatsReport


class NecessaryRequest(BaseModel):
    form: str


NecessaryResponse = NecessaryReport


class MajorizeRequest(BaseModel):
    alpha: list[int]
    beta: list[int]
    sigma: list[int] | None = None  # identity when omitted


class MajorizeResponse(BaseModel):
    majorizes: bool
    separating_point: list[str] | None = None
