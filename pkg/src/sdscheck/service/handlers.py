"""Endpoint logic, shared by the HTTP routes and the in-process CLI.

Handlers take a request model and return a response model; all domain
errors surface as RequestError so the app can map them to HTTP 400 and
the CLI to exit code 3.
"""

from __future__ import annotations

from fractions import Fraction

from ..forms import HomogeneityError, ParseError, parse_form
from ..majorization import (
    MajorizationReport,
    majorizes_under,
    necessary_condition,
    separating_point,
)
from ..search import Verdict, run_search
from ..subst import (
    Template,
    TooManyVariablesError,
    as_permutation,
    as_template,
    reciprocal_template,
    uniform_template,
)
from .schemas import (
    CheckRequest,
    CheckResponse,
    MajorizeRequest,
    MajorizeResponse,
    NecessaryReport,
    NecessaryRequest,
    StatsReport,
    ViolationReport,
    WitnessReport,
    fraction_str,
)


class RequestError(ValueError):
    """Invalid input or configuration; maps to HTTP 400 / CLI exit 3."""


def build_template(choice: str, n: int) -> Template:
    """Resolve a matrix choice string: 'an', 'gn' or 'q=r1,r2,...'."""
    choice = choice.strip()
    if choice == "an":
        return uniform_template(n)
    if choice == "gn":
        return reciprocal_template(n)
    if choice.startswith("q="):
        parts = [p.strip() for p in choice[2:].split(",") if p.strip()]
        try:
            q = as_template(Fraction(p) for p in parts)
        except (ValueError, ZeroDivisionError) as exc:
            raise RequestError(f"bad template {choice!r}: {exc}") from exc
        if len(q) != n:
            raise RequestError(
                f"template has {len(q)} entries but the form has {n} variables"
            )
        return q
    raise RequestError(f"unknown matrix choice {choice!r} (use an, gn or q=r1,r2,...)")


def _necessary_report(report: MajorizationReport) -> NecessaryReport:
    return NecessaryReport(
        holds=report.holds,
        violations=[
            ViolationReport(term=list(term), ordering=list(sigma))
            for term, sigma in report.violations
        ],
    )


def _check_response(verdict: Verdict) -> CheckResponse:
    witness = None
    if verdict.witness is not None:
        witness = WitnessReport(
            path=[list(sigma) for sigma in verdict.witness.path],
            point=[fraction_str(v) for v in verdict.witness.point],
            value=fraction_str(verdict.witness.value),
        )
    necessary = None
    if verdict.necessary is not None:
        necessary = _necessary_report(verdict.necessary)
    stats = StatsReport(
        nodes_expanded=verdict.stats.nodes_expanded,
        trivially_positive_pruned=verdict.stats.trivially_positive_pruned,
        dedup_hits=verdict.stats.dedup_hits,
        max_frontier_size=verdict.stats.max_frontier_size,
        budget_exceeded=verdict.stats.budget_exceeded,
    )
    return CheckResponse(
        verdict=verdict.kind,
        depth=verdict.depth_reached,
        witness=witness,
        necessary=necessary,
        stats=stats,
    )


def handle_check(request: CheckRequest) -> CheckResponse:
    try:
        form = parse_form(request.form)
        template = build_template(request.matrix, form.n)
        verdict = run_search(
            form,
            template,
            request.max_depth,
            check_necessary=request.check_necessary,
            dedup=request.dedup,
            node_budget=request.node_budget,
        )
    except (ParseError, HomogeneityError, TooManyVariablesError, RequestError) as exc:
        raise RequestError(str(exc)) from exc
    return _check_response(verdict)


def handle_necessary(request: NecessaryRequest) -> NecessaryReport:
    try:
        form = parse_form(request.form)
        report = necessary_condition(form)
    except (ParseError, HomogeneityError, TooManyVariablesError) as exc:
        raise RequestError(str(exc)) from exc
    return _necessary_report(report)


def handle_majorize(request: MajorizeRequest) -> MajorizeResponse:
    alpha = tuple(request.alpha)
    beta = tuple(request.beta)
    sigma = tuple(request.sigma) if request.sigma is not None else tuple(
        range(1, len(alpha) + 1)
    )
    try:
        sigma = as_permutation(sigma)
        if len(sigma) != len(alpha):
            raise ValueError(
                f"sigma has length {len(sigma)}, exponents have length {len(alpha)}"
            )
        result = majorizes_under(alpha, beta, sigma)
        point = None if result else separating_point(alpha, beta, sigma)
    except ValueError as exc:
        raise RequestError(str(exc)) from exc
    return MajorizeResponse(
        majorizes=result,
        separating_point=None if point is None else [fraction_str(v) for v in point],
    )
