import random
from fractions import Fraction as F

import pytest

from sdscheck.forms import Form, parse_form
from sdscheck.majorization import (
    MajorizationReport,
    expansion_support,
    majorizes,
    majorizes_under,
    monomial_value,
    necessary_condition,
    persistent_coefficient,
    reordered,
    separating_point,
)
from sdscheck.subst import (
    mat_mul,
    mat_pow,
    substitution_matrix,
    template_matrix,
    uniform_template,
)

from oracle import (
    naive_expand,
    random_exponent,
    random_form_terms,
    random_permutation,
    random_template,
    random_upper_triangular,
)


def sorted_point(rng, n, sigma):
    """A random point with p_{sigma(1)} >= ... >= p_{sigma(n)} >= 0."""
    values = sorted(
        (F(rng.randint(0, 10), rng.randint(1, 3)) for _ in range(n)), reverse=True
    )
    p = [F(0)] * n
    for rank, v in enumerate(values):
        p[sigma[rank] - 1] = v
    return tuple(p)


# --- plain majorization -------------------------------------------------------


def test_majorizes_pinned_examples():
    assert majorizes((3, 1, 1), (2, 1, 2))
    assert majorizes((4, 3, 1), (2, 4, 2))
    assert not majorizes((3, 4, 1), (4, 2, 2))
    assert not majorizes((4, 2, 2), (3, 4, 1))  # incomparable pair


def test_majorizes_rejects_mismatches():
    with pytest.raises(ValueError):
        majorizes((1, 2), (1, 2, 0))
    with pytest.raises(ValueError):
        majorizes((2, 0), (1, 2))


def test_majorizes_under_pinned_examples():
    assert majorizes_under((3, 4, 1), (4, 2, 2), (2, 1, 3))
    assert not majorizes_under((3, 1, 2), (4, 2, 0), (1, 3, 2))
    rng = random.Random(41)
    for _ in range(20):
        n = rng.randint(1, 4)
        alpha = random_exponent(rng, n, rng.randint(1, 6))
        assert majorizes_under(alpha, alpha, random_permutation(rng, n))


def test_partial_order_properties():
    rng = random.Random(42)
    checked = 0
    while checked < 1000:
        n = rng.randint(2, 4)
        d = rng.randint(1, 6)
        a, b, c = (random_exponent(rng, n, d) for _ in range(3))
        sigma = random_permutation(rng, n)
        assert majorizes_under(a, a, sigma)
        if majorizes_under(a, b, sigma) and majorizes_under(b, a, sigma):
            assert a == b
        if majorizes_under(a, b, sigma) and majorizes_under(b, c, sigma):
            assert majorizes_under(a, c, sigma)
        checked += 1


# --- sorted-point characterization --------------------------------------------


def test_separating_point_pinned_examples():
    identity = (1, 2, 3)
    assert separating_point((3, 4, 1), (4, 2, 2), identity) == (F(2), F(1), F(1))
    assert separating_point((4, 2, 2), (3, 4, 1), identity) == (F(2), F(2), F(1))
    assert separating_point((0, 2), (1, 1), (1, 2)) == (F(2), F(1))


def test_separating_point_requires_failure():
    with pytest.raises(ValueError):
        separating_point((2, 0), (1, 1), (1, 2))


def test_sorted_point_dominance_both_directions():
    rng = random.Random(43)
    for _ in range(300):
        n = rng.randint(2, 4)
        d = rng.randint(1, 6)
        alpha = random_exponent(rng, n, d)
        beta = random_exponent(rng, n, d)
        sigma = random_permutation(rng, n)
        if majorizes_under(alpha, beta, sigma):
            for _ in range(25):
                p = sorted_point(rng, n, sigma)
                assert monomial_value(alpha, p) >= monomial_value(beta, p)
        else:
            p = separating_point(alpha, beta, sigma)
            assert all(v >= 0 for v in p)
            ranked = [p[sigma[i] - 1] for i in range(n)]
            assert ranked == sorted(ranked, reverse=True)
            assert monomial_value(beta, p) > monomial_value(alpha, p)


# --- expansion support ---------------------------------------------------------


def test_expansion_support_pinned_examples():
    assert expansion_support((0, 0, 3), template_matrix(uniform_template(3))) == {
        (0, 0, 3)
    }
    assert expansion_support((1, 0), template_matrix(uniform_template(2))) == {
        (1, 0),
        (0, 1),
    }
    rng = random.Random(44)
    support = expansion_support((1, 1), random_upper_triangular(rng, 2))
    assert support == {(1, 1), (0, 2)}


def test_expansion_support_rejects_bad_matrices():
    with pytest.raises(ValueError):
        expansion_support((1, 1), ((F(1), F(0)), (F(0), F(1))))  # zero above diagonal
    with pytest.raises(ValueError):
        expansion_support((1, 1), ((F(1), F(1)), (F(1), F(1))))  # not triangular


def test_expansion_support_equals_majorization_prediction():
    rng = random.Random(45)
    from oracle import compositions

    for _ in range(120):
        n = rng.randint(1, 4)
        d = rng.randint(1, 6)
        alpha = random_exponent(rng, n, d)
        M = random_upper_triangular(rng, n)
        predicted = {
            j for j in compositions(d, n) if majorizes(alpha, j)
        }
        assert expansion_support(alpha, M) == predicted


# --- the pre-check -------------------------------------------------------------


def test_necessary_condition_cyclic(cyclic):
    report = necessary_condition(cyclic)
    assert isinstance(report, MajorizationReport)
    assert not report.holds
    assert ((3, 1, 2), (1, 3, 2)) in report.violations
    assert report.checked_orderings == 6
    assert report.violations == tuple(sorted(report.violations))


def test_necessary_condition_trivially_positive_is_vacuous():
    report = necessary_condition(parse_form("x1^2 + 2*x1*x2 + x2^2"))
    assert report.holds and report.violations == ()


def test_necessary_condition_two_variable_example():
    report = necessary_condition(parse_form("x1^2 - x1*x2"))
    assert not report.holds
    assert report.violations == (((1, 1), (2, 1)),)


def test_necessary_condition_counts_only_positive_majorizers():
    # The negative term x1*x2^2 is majorized by the other negative term
    # x1^2*x2 under the identity, but negative majorizers must not count.
    f = parse_form("x1^3 - x1^2*x2 - x1*x2^2 + 10*x2^3")
    report = necessary_condition(f)
    assert ((1, 2), (1, 2)) not in report.violations  # x1^3 majorizes it
    g = parse_form("x2^3 - x1^2*x2 - x1*x2^2")
    bad = necessary_condition(g)
    assert not bad.holds
    assert ((2, 1), (1, 2)) in bad.violations


# --- persistent coefficients ----------------------------------------------------


def test_persistent_coefficient_cyclic_is_always_minus_one(cyclic):
    q = uniform_template(3)
    for m in range(1, 6):
        assert persistent_coefficient(cyclic, (1, 3, 2), q, m, (3, 1, 2)) == -1


def test_persistent_coefficient_single_term():
    f = Form(3, {(1, 1, 0): F(7)})
    q = (F(2), F(3), F(5))
    # identity ordering: the literal product q1^a1*...*qn^an
    assert persistent_coefficient(f, (1, 2, 3), q, 1, (1, 1, 0)) == 7 * 2 * 3
    # non-involution ordering: the i-th ranked variable carries q_i, so
    # the product pairs q with the reordered exponents.
    nu = reordered((1, 1, 0), (2, 3, 1))
    assert nu == (1, 0, 1)
    assert persistent_coefficient(f, (2, 3, 1), q, 1, (1, 1, 0)) == 7 * 2 * 5


def test_persistent_coefficient_requires_term():
    f = parse_form("x1^2 - x1*x2")
    with pytest.raises(ValueError):
        persistent_coefficient(f, (1, 2), uniform_template(2), 1, (0, 2))
    with pytest.raises(ValueError):
        persistent_coefficient(f, (1, 2), uniform_template(2), 0, (2, 0))


def qualifying_terms(form, sigma):
    """Terms not majorized under sigma by any other term of the form."""
    exponents = [e for e, _ in form.terms()]
    return [
        lam
        for lam in exponents
        if not any(
            mu != lam and majorizes_under(mu, lam, sigma) for mu in exponents
        )
    ]


def test_persistent_coefficient_closed_form_random():
    rng = random.Random(46)
    trials = 0
    while trials < 100:
        n = rng.randint(2, 3)
        d = rng.randint(1, 5)
        form = Form(n, random_form_terms(rng, n, d, 6))
        sigma = random_permutation(rng, n)
        q = random_template(rng, n)
        m = rng.randint(1, 3)
        for lam in qualifying_terms(form, sigma):
            nu = reordered(lam, sigma)
            expected = form.coefficient(lam)
            for qi, e in zip(q, nu):
                expected *= qi ** (e * m)
            assert persistent_coefficient(form, sigma, q, m, lam) == expected
        trials += 1


def test_persistent_coefficient_matches_naive_expansion():
    rng = random.Random(47)
    for _ in range(30):
        n = rng.randint(2, 3)
        d = rng.randint(1, 4)
        terms = random_form_terms(rng, n, d, 5)
        form = Form(n, terms)
        sigma = random_permutation(rng, n)
        q = random_template(rng, n)
        m = rng.randint(1, 3)
        matrix = mat_mul(
            substitution_matrix(sigma, q), mat_pow(template_matrix(q), m - 1)
        )
        lam = next(iter(terms))
        expanded = naive_expand(terms, matrix)
        assert persistent_coefficient(form, sigma, q, m, lam) == expanded.get(
            reordered(lam, sigma), F(0)
        )
