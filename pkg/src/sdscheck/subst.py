"""Substitution matrices and exact linear changes of variables.

A template q = (q1, ..., qn) of positive rationals defines the upper
triangular matrix with column j constantly q_j on rows 1..j:

    q = (1, 1, 1)      ->  ((1,1,1),(0,1,1),(0,0,1))       (the classic 'an')
    q = (1, 1/2, 1/3)  ->  ((1,1/2,1/3),(0,1/2,1/3),(0,0,1/3))   ('gn')

For an ordering sigma (one-line notation, 1-based), the substitution
matrix permutes the rows so that the i-th ranked variable x_{sigma(i)}
maps to q_i*t_i + q_{i+1}*t_{i+1} + ... + q_n*t_n - the difference
substitution for the sorted variables x_{sigma(1)} >= ... >= x_{sigma(n)}.
Equivalently it is P * K where K is the template matrix and P is the
permutation matrix with P e_j = e_{sigma(j)}.

Matrices are tuples of tuples of Fractions; all operations are exact.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Iterable, Iterator

from .forms import Exponent, Form, Point

Template = tuple[Fraction, ...]
Permutation = tuple[int, ...]
Matrix = tuple[tuple[Fraction, ...], ...]

# n! images per expansion round; 8! = 40320 is already punishing.
DEFAULT_MAX_VARS = 8


class TooManyVariablesError(ValueError):
    """Raised when n! enumeration would exceed the variable-count guard."""

    def __init__(self, n: int, max_vars: int):
        super().__init__(
            f"{n} variables means {factorial(n)} orderings per round; "
            f"the guard allows at most {max_vars} variables"
        )


def as_template(values: Iterable[Fraction]) -> Template:
    q = tuple(Fraction(v) for v in values)
    if not q:
        raise ValueError("template must not be empty")
    if any(v <= 0 for v in q):
        raise ValueError(f"template entries must be positive, got {q}")
    return q


def uniform_template(n: int) -> Template:
    """All-ones template ('an')."""
    return as_template([Fraction(1)] * n)


def reciprocal_template(n: int) -> Template:
    """Template (1, 1/2, ..., 1/n) ('gn')."""
    return as_template(Fraction(1, j) for j in range(1, n + 1))


def as_permutation(values: Iterable[int]) -> Permutation:
    sigma = tuple(int(v) for v in values)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{len(sigma)}")
    return sigma


def identity_permutation(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def inverse_permutation(sigma: Permutation) -> Permutation:
    inv = [0] * len(sigma)
    for i, v in enumerate(sigma):
        inv[v - 1] = i + 1
    return tuple(inv)


def all_orderings(n: int, max_vars: int = DEFAULT_MAX_VARS) -> Iterator[Permutation]:
    """All n! orderings in lexicographic one-line order."""
    if n > max_vars:
        raise TooManyVariablesError(n, max_vars)
    return permutations(range(1, n + 1))


def template_matrix(q: Template) -> Matrix:
    """Upper triangular matrix with entry (i, j) = q_j for i <= j, else 0."""
    q = as_template(q)
    n = len(q)
    zero = Fraction(0)
    return tuple(
        tuple(q[j] if i <= j else zero for j in range(n)) for i in range(n)
    )


def permutation_matrix(sigma: Permutation) -> Matrix:
    """Matrix P with P e_j = e_{sigma(j)} (entry (i, j) = 1 iff i = sigma(j))."""
    sigma = as_permutation(sigma)
    n = len(sigma)
    one, zero = Fraction(1), Fraction(0)
    return tuple(
        tuple(one if i + 1 == sigma[j] else zero for j in range(n)) for i in range(n)
    )


def substitution_matrix(sigma: Permutation, q: Template) -> Matrix:
    """Rows of the template matrix permuted for the ordering sigma.

    Row sigma(i) is row i of the template matrix, so the product with a
    column vector substitutes x_{sigma(i)} by the i-th difference chain.
    Equals permutation_matrix(sigma) @ template_matrix(q).
    """
    sigma = as_permutation(sigma)
    if len(sigma) != len(q):
        raise ValueError(f"permutation length {len(sigma)} != template length {len(q)}")
    K = template_matrix(q)
    inv = inverse_permutation(sigma)
    return tuple(K[inv[i] - 1] for i in range(len(sigma)))


def identity_matrix(n: int) -> Matrix:
    one, zero = Fraction(1), Fraction(0)
    return tuple(
        tuple(one if i == j else zero for j in range(n)) for i in range(n)
    )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    if len(b) != n:
        raise ValueError(f"dimension mismatch: {n} vs {len(b)}")
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def mat_pow(m: Matrix, power: int) -> Matrix:
    """Exact power by repeated squaring; m^0 is the identity."""
    if power < 0:
        raise ValueError("negative matrix power")
    result = identity_matrix(len(m))
    base = m
    while power:
        if power & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        power >>= 1
    return result


def mat_vec(m: Matrix, v: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    if len(v) != len(m):
        raise ValueError(f"dimension mismatch: matrix {len(m)}, vector {len(v)}")
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def matrix_text(m: Matrix) -> str:
    """Debug rendering, one row per line."""
    return "\n".join("  ".join(str(x) for x in row) for row in m)


def apply_substitution(form: Form, matrix: Matrix) -> Form:
    """Expand form(M * X) exactly as a Form in the new variables.

    Each variable x_i is replaced by the linear form given by row i of
    the matrix; powers of each row are cached per call.  The result is
    homogeneous of the same degree (linear substitution into a form).
    """
    n = form.n
    if len(matrix) != n:
        raise ValueError(f"matrix is {len(matrix)}x{len(matrix)}, form has {n} variables")
    zero_exp = (0,) * n
    rows: list[dict[Exponent, Fraction]] = []
    for i in range(n):
        row = {}
        for j, entry in enumerate(matrix[i]):
            if entry != 0:
                unit = tuple(int(k == j) for k in range(n))
                row[unit] = Fraction(entry)
        rows.append(row)

    power_cache: dict[tuple[int, int], dict[Exponent, Fraction]] = {}

    def row_power(i: int, e: int) -> dict[Exponent, Fraction]:
        key = (i, e)
        if key not in power_cache:
            if e == 1:
                power_cache[key] = rows[i]
            else:
                power_cache[key] = _poly_mul(row_power(i, e - 1), rows[i])
        return power_cache[key]

    out: dict[Exponent, Fraction] = {}
    for exponent, coeff in form.terms():
        product = {zero_exp: coeff}
        for i, e in enumerate(exponent):
            if e:
                product = _poly_mul(product, row_power(i, e))
        for exp, c in product.items():
            out[exp] = out.get(exp, Fraction(0)) + c
    return Form(n, out, degree=form.degree)


def _poly_mul(
    a: dict[Exponent, Fraction], b: dict[Exponent, Fraction]
) -> dict[Exponent, Fraction]:
    out: dict[Exponent, Fraction] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            exp = tuple(x + y for x, y in zip(ea, eb))
            out[exp] = out.get(exp, Fraction(0)) + ca * cb
    return {e: c for e, c in out.items() if c != 0}


def substitution_images(
    form: Form, q: Template, max_vars: int = DEFAULT_MAX_VARS
) -> list[tuple[Permutation, Form]]:
    """All n! substituted images of the form, in lexicographic sigma order.

    Duplicate images are retained; callers that want set semantics
    deduplicate on content-normalized forms.
    """
    q = as_template(q)
    if len(q) != form.n:
        raise ValueError(f"template length {len(q)} != variable count {form.n}")
    return [
        (sigma, apply_substitution(form, substitution_matrix(sigma, q)))
        for sigma in all_orderings(form.n, max_vars)
    ]


def descending_order(point: Point) -> Permutation:
    """The ordering sigma with point[sigma(1)-1] >= ... >= point[sigma(n)-1].

    Ties break by variable index, so the result is deterministic.
    """
    return tuple(sorted(range(1, len(point) + 1), key=lambda j: (-point[j - 1], j)))


def nonnegative_preimage(point: Point, sigma: Permutation, q: Template) -> Point | None:
    """Solve substitution_matrix(sigma, q) * y = point by back-substitution.

    The matrix is always invertible (positive template), so a solution
    exists; it is returned only when every coordinate is nonnegative,
    else None.  A nonnegative preimage exists exactly when sigma sorts
    the point descending.
    """
    q = as_template(q)
    sigma = as_permutation(sigma)
    n = len(q)
    if len(point) != n or len(sigma) != n:
        raise ValueError("point, permutation and template lengths must agree")
    p = tuple(Fraction(v) for v in point)
    # B y = p reorders to K y = r with r_j = p_{sigma(j)}; K is upper triangular.
    r = [p[sigma[j] - 1] for j in range(n)]
    y = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        tail = sum((q[j] * y[j] for j in range(i + 1, n)), Fraction(0))
        y[i] = (r[i] - tail) / q[i]
    if any(v < 0 for v in y):
        return None
    return tuple(y)
