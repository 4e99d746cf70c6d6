"""Command-line client for the checker service.

The CLI holds no domain logic: it builds a request model, hands it to
the service handlers (in-process by default, over HTTP with --server)
and renders the response.  Exit codes for `check`: 0 nonnegative (psd),
1 counterexample found (not_psd), 2 inconclusive, 3 input/config error.
`necessary` exits 0 when the pre-check holds, 1 when violated;
`majorize` exits 0/1 mirroring the comparison.  --json emits the stable
v1 report with every rational as an exact "num/den" string.
"""

from __future__ import annotations

import sys
from fractions import Fraction

import click
import httpx
from pydantic import BaseModel

from . import __version__
from .forms import monomial_text
from .service.handlers import RequestError, handle_check, handle_majorize, handle_necessary
from .service.schemas import (
    CheckRequest,
    CheckResponse,
    MajorizeRequest,
    MajorizeResponse,
    NecessaryRequest,
    NecessaryResponse,
)

EXIT_ERROR = 3
_CHECK_EXIT = {"psd": 0, "not_psd": 1, "inconclusive": 2}


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_ERROR)


def _post(server: str, route: str, request: BaseModel, response_type: type) -> BaseModel:
    url = server.rstrip("/") + route
    try:
        reply = httpx.post(url, json=request.model_dump(), timeout=600.0)
    except httpx.HTTPError as exc:
        _fail(f"cannot reach {url}: {exc}")
    if reply.status_code == 400:
        _fail(reply.json().get("detail", reply.text))
    if reply.status_code != 200:
        _fail(f"{url} returned HTTP {reply.status_code}: {reply.text}")
    return response_type.model_validate(reply.json())


def _run(server: str | None, route: str, handler, request: BaseModel, response_type: type):
    if server:
        return _post(server, route, request, response_type)
    try:
        return handler(request)
    except RequestError as exc:
        _fail(str(exc))


def _pretty(value: str) -> str:
    """Render a 'num/den' string compactly for text output."""
    f = Fraction(value)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _ordering_text(ordering: list[int]) -> str:
    return " ≥ ".join(f"x{i}" for i in ordering)


def _echo_necessary(report: NecessaryResponse) -> None:
    if report.holds:
        click.echo("necessary condition for positive termination: holds")
        return
    click.echo("necessary condition for positive termination: violated")
    for v in report.violations:
        click.echo(
            f"  term {monomial_text(tuple(v.term))} has no positive majorizer "
            f"in ordering {_ordering_text(v.ordering)}"
        )


def _echo_check(response: CheckResponse) -> None:
    labels = {"psd": "PSD", "not_psd": "not PSD", "inconclusive": "inconclusive"}
    click.echo(f"verdict: {labels[response.verdict]}")
    click.echo(f"depth reached: {response.depth}")
    if response.witness is not None:
        w = response.witness
        if w.path:
            click.echo("witness path: " + " -> ".join(",".join(map(str, s)) for s in w.path))
        click.echo("witness point: (" + ", ".join(_pretty(v) for v in w.point) + ")")
        click.echo(f"witness value: {_pretty(w.value)}")
    s = response.stats
    click.echo(
        f"stats: expanded={s.nodes_expanded} pruned={s.trivially_positive_pruned} "
        f"dedup={s.dedup_hits} peak_frontier={s.max_frontier_size}"
        + (" budget_exceeded" if s.budget_exceeded else "")
    )
    if response.necessary is not None:
        _echo_necessary(response.necessary)


def _read_form(form: str | None, file: str | None) -> str:
    if (form is None) == (file is None):
        _fail("provide the polynomial either as an argument or with --file, not both")
    if file is not None:
        try:
            with open(file, encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            _fail(str(exc))
    assert form is not None
    return form


@click.group()
@click.version_option(__version__)
@click.option("--server", metavar="URL", default=None, help="Use a running service instead of running in-process.")
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Exact nonnegativity checks on the nonnegative orthant."""
    ctx.obj = server


@main.command()
@click.argument("form", required=False)
@click.option("--file", "file_", type=click.Path(), default=None, help="Read the polynomial from a file.")
@click.option("--matrix", default="an", show_default=True, metavar="{an|gn|q=r1,r2,...}", help="Substitution template.")
@click.option("--max-depth", default=6, show_default=True, type=click.IntRange(min=0))
@click.option("--node-budget", default=1_000_000, show_default=True, envvar="SDS_NODE_BUDGET", type=click.IntRange(min=1))
@click.option("--check-necessary", is_flag=True, help="Attach the majorization pre-check report.")
@click.option("--no-dedup", is_flag=True, help="Keep duplicate branch images.")
@click.option("--json", "as_json", is_flag=True, help="Emit the v1 JSON report.")
@click.pass_obj
def check(server, form, file_, matrix, max_depth, node_budget, check_necessary, no_dedup, as_json):
    """Decide nonnegativity of a homogeneous polynomial."""
    request = CheckRequest(
        form=_read_form(form, file_),
        matrix=matrix,
        max_depth=max_depth,
        node_budget=node_budget,
        check_necessary=check_necessary,
        dedup=not no_dedup,
    )
    response = _run(server, "/v1/check", handle_check, request, CheckResponse)
    if as_json:
        click.echo(response.model_dump_json(exclude_none=True, indent=2))
    else:
        _echo_check(response)
    sys.exit(_CHECK_EXIT[response.verdict])


@main.command()
@click.argument("form", required=False)
@click.option("--file", "file_", type=click.Path(), default=None, help="Read the polynomial from a file.")
@click.option("--json", "as_json", is_flag=True, help="Emit the report as JSON.")
@click.pass_obj
def necessary(server, form, file_, as_json):
    """Check that every negative term has a positive majorizer in every ordering."""
    request = NecessaryRequest(form=_read_form(form, file_))
    response = _run(server, "/v1/necessary", handle_necessary, request, NecessaryResponse)
    if as_json:
        click.echo(response.model_dump_json(indent=2))
    else:
        _echo_necessary(response)
    sys.exit(0 if response.holds else 1)


@main.command()
@click.argument("alpha")
@click.argument("beta")
@click.option("--sigma", default=None, metavar="I1,I2,...", help="Ordering as one-line permutation images; identity when omitted.")
@click.option("--json", "as_json", is_flag=True, help="Emit the result as JSON.")
@click.pass_obj
def majorize(server, alpha, beta, sigma, as_json):
    """Compare monomial exponent vectors under a variable ordering."""

    def ints(text: str, what: str) -> list[int]:
        try:
            return [int(p) for p in text.split(",")]
        except ValueError:
            _fail(f"{what} must be a comma-separated integer list, got {text!r}")

    request = MajorizeRequest(
        alpha=ints(alpha, "alpha"),
        beta=ints(beta, "beta"),
        sigma=None if sigma is None else ints(sigma, "sigma"),
    )
    response = _run(server, "/v1/majorize", handle_majorize, request, MajorizeResponse)
    if as_json:
        click.echo(response.model_dump_json(exclude_none=True, indent=2))
    else:
        click.echo("true" if response.majorizes else "false")
        if response.separating_point is not None:
            click.echo(
                "separating point: ("
                + ", ".join(_pretty(v) for v in response.separating_point)
                + ")"
            )
    sys.exit(0 if response.majorizes else 1)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("sdscheck.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
