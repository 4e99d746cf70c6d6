"""Majorization order on monomial exponents and the termination pre-check.

For exponent vectors of equal total degree, alpha majorizes beta when
every prefix sum of alpha dominates the corresponding prefix sum of
beta.  Reordering both vectors by a permutation sigma gives the order
"in the ordering x_{sigma(1)} >= ... >= x_{sigma(n)}": on points sorted
that way, X^alpha >= X^beta holds everywhere iff the reordered vectors
majorize.

The pre-check: if some negative term of a form is, under some ordering,
majorized by no positive term, then one substitution branch keeps a
negative coefficient forever (the branch that applies that ordering
once and then the identity ordering repeatedly), so the search can
never prove nonnegativity by pruning everything - for any positive
template.  `necessary_condition` reports every such (term, ordering)
violation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .forms import Exponent, Form, Point
from .subst import (
    DEFAULT_MAX_VARS,
    Matrix,
    Permutation,
    Template,
    TooManyVariablesError,
    all_orderings,
    apply_substitution,
    as_permutation,
    as_template,
    mat_mul,
    mat_pow,
    substitution_matrix,
    template_matrix,
)


def _check_comparable(alpha: Exponent, beta: Exponent) -> None:
    if len(alpha) != len(beta):
        raise ValueError(f"length mismatch: {alpha} vs {beta}")
    if sum(alpha) != sum(beta):
        raise ValueError(
            f"degree mismatch: {alpha} has degree {sum(alpha)}, "
            f"{beta} has degree {sum(beta)}"
        )


def majorizes(alpha: Exponent, beta: Exponent) -> bool:
    """Prefix-sum dominance for equal-degree exponent vectors.

    Only the first n-1 prefixes are tested; the full sums are equal by
    hypothesis.
    """
    _check_comparable(alpha, beta)
    sa = sb = 0
    for k in range(len(alpha) - 1):
        sa += alpha[k]
        sb += beta[k]
        if sa < sb:
            return False
    return True


def reordered(alpha: Exponent, sigma: Permutation) -> Exponent:
    """(alpha_{sigma(1)}, ..., alpha_{sigma(n)})."""
    return tuple(alpha[s - 1] for s in sigma)


def majorizes_under(alpha: Exponent, beta: Exponent, sigma: Permutation) -> bool:
    """Majorization after reordering both vectors by sigma."""
    sigma = as_permutation(sigma)
    return majorizes(reordered(alpha, sigma), reordered(beta, sigma))


def separating_point(alpha: Exponent, beta: Exponent, sigma: Permutation) -> Point:
    """A sorted nonnegative point where X^beta strictly exceeds X^alpha.

    Requires that alpha does not majorize beta under sigma.  With k the
    first failing prefix, the point has 2 at the k highest-ranked
    coordinates and 1 elsewhere; the exponent gap at that prefix is at
    least 1, so 2^gap > 1 separates the monomials.
    """
    sigma = as_permutation(sigma)
    _check_comparable(alpha, beta)
    a, b = reordered(alpha, sigma), reordered(beta, sigma)
    sa = sb = 0
    fail = None
    for k in range(len(a) - 1):
        sa += a[k]
        sb += b[k]
        if sa < sb:
            fail = k + 1
            break
    if fail is None:
        raise ValueError(f"{alpha} majorizes {beta} under {sigma}; nothing separates them")
    coords = [Fraction(1)] * len(a)
    for i in range(fail):
        coords[sigma[i] - 1] = Fraction(2)
    return tuple(coords)


def monomial_value(exponent: Exponent, point: Point) -> Fraction:
    value = Fraction(1)
    for v, e in zip(point, exponent):
        if e:
            value *= Fraction(v) ** e
    return value


def expansion_support(alpha: Exponent, matrix: Matrix) -> frozenset[Exponent]:
    """Exponents with nonzero coefficient when X^alpha is expanded under M.

    M must be upper triangular with positive entries on and above the
    diagonal.  Computed by literally expanding the monomial, so it can
    serve as an independent check of the prefix-sum characterization
    (the support equals { j : |j| = |alpha|, alpha majorizes j }).
    """
    n = len(alpha)
    if len(matrix) != n:
        raise ValueError(f"matrix is {len(matrix)}x{len(matrix)}, exponent has {n} entries")
    for i in range(n):
        for j in range(n):
            if j < i and matrix[i][j] != 0:
                raise ValueError("matrix is not upper triangular")
            if j >= i and matrix[i][j] <= 0:
                raise ValueError("matrix needs positive entries on and above the diagonal")
    single = Form(n, {tuple(alpha): Fraction(1)})
    return frozenset(e for e, _ in apply_substitution(single, matrix).terms())


@dataclass(frozen=True)
class MajorizationReport:
    """Outcome of the termination pre-check.

    holds is True iff every negative term is majorized by some positive
    term under every ordering.  Each violation is a (term, ordering)
    pair for which no positive term works; the list is sorted by term,
    then ordering, and is exhaustive for diagnostics.
    """

    holds: bool
    violations: tuple[tuple[Exponent, Permutation], ...]
    checked_orderings: int


def necessary_condition(form: Form, max_vars: int = DEFAULT_MAX_VARS) -> MajorizationReport:
    """Check that every negative term has a positive majorizer in every ordering.

    A single violation means no amount of further substitution rounds
    can ever make all branch images trivially positive, whatever the
    positive template: the violating branch keeps a strictly negative
    coefficient (only positive majorizers could contribute positive mass
    to the persistent monomial; negative ones push it further down).
    """
    if form.n > max_vars:
        raise TooManyVariablesError(form.n, max_vars)
    positives = [e for e, c in form.terms() if c > 0]
    negatives = sorted(e for e, c in form.terms() if c < 0)
    violations: list[tuple[Exponent, Permutation]] = []
    for lam in negatives:
        for sigma in all_orderings(form.n, max_vars):
            if not any(majorizes_under(mu, lam, sigma) for mu in positives):
                violations.append((lam, sigma))
    return MajorizationReport(
        holds=not violations,
        violations=tuple(violations),
        checked_orderings=factorial(form.n),
    )


def persistent_coefficient(
    form: Form, sigma: Permutation, q: Template, rounds: int, term: Exponent
) -> Fraction:
    """Coefficient surviving `rounds` substitution rounds along one branch.

    Expands form(B * K^(rounds-1) * X), where B is the substitution
    matrix for sigma and K the template matrix - the branch that applies
    the ordering sigma once and then the identity ordering - and returns
    the coefficient of the monomial whose exponents are `term` read in
    the sigma-ranked variable order, i.e. of the exponent vector
    (term_{sigma(1)}, ..., term_{sigma(n)}).

    When no other term of the form majorizes `term` under sigma, that
    monomial is generated only by `term` itself and the result is
    exactly (q1^t1 * ... * qn^tn)^rounds * C_term with (t1, ..., tn) the
    reordered exponents: the i-th ranked variable carries q_i.
    """
    sigma = as_permutation(sigma)
    q = as_template(q)
    term = tuple(int(e) for e in term)
    if term not in form:
        raise ValueError(f"{term} is not a term of the form")
    if rounds < 1:
        raise ValueError("rounds must be >= 1")
    matrix = mat_mul(
        substitution_matrix(sigma, q), mat_pow(template_matrix(q), rounds - 1)
    )
    expanded = apply_substitution(form, matrix)
    return expanded.coefficient(reordered(term, sigma))
