"""Breadth-first successive difference substitution search.

Level by level, every form in the frontier is replaced by its n!
substituted images.  Trivially positive images (no negative
coefficient) are nonnegative on the orthant and are pruned; a trivially
negative image (negative coefficient sum) certifies a concrete
counterexample, because the product of its branch matrices applied to
the all-ones point is a nonnegative point where the input is negative.
An empty frontier proves nonnegativity on the orthant.

The search need not terminate, so it carries a depth budget and a node
budget; exhausting either yields an inconclusive verdict, never a
nonnegativity claim.  Verdicts are deterministic: children are
enumerated parent by parent with orderings in lexicographic one-line
order, and the first trivially negative child found is the one with the
lexicographically least branch path at its depth.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from fractions import Fraction

from .forms import Form, Point, ones
from .majorization import MajorizationReport, necessary_condition
from .subst import (
    DEFAULT_MAX_VARS,
    Permutation,
    Template,
    TooManyVariablesError,
    all_orderings,
    apply_substitution,
    as_template,
    mat_mul,
    mat_vec,
    substitution_matrix,
)

PSD = "psd"
NOT_PSD = "not_psd"
INCONCLUSIVE = "inconclusive"

DEFAULT_MAX_DEPTH = 6
DEFAULT_NODE_BUDGET = 1_000_000


class NodeBudgetExceeded(RuntimeError):
    """Raised when expansion would exceed the configured node budget."""


@dataclass
class SearchStats:
    nodes_expanded: int = 0
    trivially_positive_pruned: int = 0
    dedup_hits: int = 0
    max_frontier_size: int = 0
    budget_exceeded: bool = False


@dataclass(frozen=True)
class SearchNode:
    """A content-normalized branch image and the orderings that produced it."""

    form: Form
    path: tuple[Permutation, ...]

    @property
    def depth(self) -> int:
        return len(self.path)


@dataclass(frozen=True)
class Witness:
    """A nonnegative point where the input form is exactly negative."""

    path: tuple[Permutation, ...]
    point: Point
    value: Fraction


@dataclass(frozen=True)
class Verdict:
    kind: str  # PSD | NOT_PSD | INCONCLUSIVE
    depth_reached: int
    witness: Witness | None = None
    necessary: MajorizationReport | None = None
    stats: SearchStats = field(default_factory=SearchStats)


def witness_point(path: tuple[Permutation, ...], q: Template) -> Point:
    """B_1 * B_2 * ... * B_m applied to the all-ones vector, exactly."""
    q = as_template(q)
    point = ones(len(q))
    if not path:
        return point
    matrix = substitution_matrix(path[0], q)
    for sigma in path[1:]:
        matrix = mat_mul(matrix, substitution_matrix(sigma, q))
    return mat_vec(matrix, point)


def expand_frontier(
    frontier: list[SearchNode],
    q: Template,
    dedup: bool = True,
    *,
    seen: set[Form] | None = None,
    stats: SearchStats | None = None,
    node_budget: int | None = None,
    max_vars: int = DEFAULT_MAX_VARS,
) -> tuple[list[SearchNode], int, SearchNode | None]:
    """One breadth-first round over the frontier.

    Returns (next frontier, pruned count, first trivially negative child
    or None).  Enumeration is parent by parent, orderings lexicographic,
    and stops at the first trivially negative child.  With dedup, a
    child whose content-normalized form was already seen in this run is
    dropped; `seen` is updated in place.  Raises NodeBudgetExceeded once
    more children than the budget allows have been expanded (counters in
    `stats` stay valid).
    """
    q = as_template(q)
    if seen is None:
        seen = set()
    if stats is None:
        stats = SearchStats()
    pruned = 0
    next_frontier: list[SearchNode] = []
    for node in frontier:
        for sigma in all_orderings(node.form.n, max_vars):
            if node_budget is not None and stats.nodes_expanded >= node_budget:
                stats.budget_exceeded = True
                raise NodeBudgetExceeded(f"node budget {node_budget} exhausted")
            image = apply_substitution(node.form, substitution_matrix(sigma, q))
            stats.nodes_expanded += 1
            if image.is_trivially_positive():
                pruned += 1
                stats.trivially_positive_pruned += 1
                continue
            child = SearchNode(image.content_normalized(), node.path + (sigma,))
            if child.form.is_trivially_negative():
                return next_frontier, pruned, child
            if dedup:
                if child.form in seen:
                    stats.dedup_hits += 1
                    continue
                seen.add(child.form)
            next_frontier.append(child)
    return next_frontier, pruned, None


def run_search(
    form: Form,
    q: Template,
    max_depth: int = DEFAULT_MAX_DEPTH,
    *,
    check_necessary: bool = False,
    dedup: bool = True,
    node_budget: int = DEFAULT_NODE_BUDGET,
    max_vars: int = DEFAULT_MAX_VARS,
) -> Verdict:
    """Decide nonnegativity of a form on the nonnegative orthant.

    Returns PSD when some round prunes every image (or the input itself
    has no negative coefficient, which settles it at depth 0), NOT_PSD
    with an exact re-verified witness when a trivially negative image
    appears, and INCONCLUSIVE when the depth or node budget runs out.
    Negative detection starts with the substituted images, not the input
    itself, so the witness for x1^2 - 3*x1*x2 + x2^2 is the point (2, 1)
    produced by the identity ordering rather than the all-ones point.

    With check_necessary, the majorization pre-check report is attached
    to the verdict; a violated report means no depth can ever produce a
    PSD verdict, but the search still runs in case a witness turns up.
    """
    q = as_template(q)
    if len(q) != form.n:
        raise ValueError(f"template length {len(q)} != variable count {form.n}")
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    if form.n > max_vars:
        raise TooManyVariablesError(form.n, max_vars)
    stats = SearchStats()
    necessary = necessary_condition(form, max_vars) if check_necessary else None

    if form.is_trivially_positive():
        return Verdict(PSD, 0, necessary=necessary, stats=stats)

    root = SearchNode(form.content_normalized(), ())
    frontier = [root]
    seen = {root.form}
    depth = 0
    while frontier and depth < max_depth:
        stats.max_frontier_size = max(stats.max_frontier_size, len(frontier))
        try:
            frontier, _, negative = expand_frontier(
                frontier,
                q,
                dedup,
                seen=seen,
                stats=stats,
                node_budget=node_budget,
                max_vars=max_vars,
            )
        except NodeBudgetExceeded:
            return Verdict(INCONCLUSIVE, depth, necessary=necessary, stats=stats)
        depth += 1
        if negative is not None:
            point = witness_point(negative.path, q)
            value = form.evaluate(point)
            assert value < 0, "trivially negative image must certify a negative value"
            return Verdict(
                NOT_PSD,
                depth,
                witness=Witness(negative.path, point, value),
                necessary=necessary,
                stats=stats,
            )
        if not frontier:
            # A violated pre-check rules this out; reaching it would be a bug.
            assert necessary is None or necessary.holds
            return Verdict(PSD, depth, necessary=necessary, stats=stats)
    return Verdict(INCONCLUSIVE, depth, necessary=necessary, stats=stats)
