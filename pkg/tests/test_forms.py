import random
from fractions import Fraction as F

import pytest

from sdscheck.forms import (
    Form,
    HomogeneityError,
    ParseError,
    monomial_text,
    ones,
    parse_form,
)

from oracle import random_form_terms, random_point


def test_parse_cyclic_sextic(cyclic):
    assert cyclic.n == 3
    assert cyclic.degree == 6
    assert len(cyclic) == 6
    assert cyclic.coefficient((4, 2, 0)) == 1
    assert cyclic.coefficient((3, 1, 2)) == -1
    assert cyclic.coefficient((1, 2, 3)) == -1


def test_parse_square_expansion():
    f = parse_form("x1^2 - 2*x1*x2 + x2^2")
    assert f.n == 2 and f.degree == 2 and len(f) == 3
    assert f.coefficient((1, 1)) == -2


def test_parse_inhomogeneous_lists_both_terms():
    with pytest.raises(HomogeneityError) as err:
        parse_form("x1 + x2^2")
    assert err.value.terms == ("x1", "x2^2")
    assert "degree 1" in str(err.value) and "degree 2" in str(err.value)


@pytest.mark.parametrize(
    "text",
    ["", "  ", "x0", "x", "x1^", "3x1", "x1 + + x2", "x1 & x2", "1/0*x1", "3*", "x1*"],
)
def test_parse_rejects_bad_syntax(text):
    with pytest.raises(ParseError) as err:
        parse_form(text)
    assert err.value.position is not None


def test_parse_rational_coefficients_and_hint():
    f = parse_form("3/2*x1^2*x3 - x2^3", n_hint=5)
    assert f.n == 5
    assert f.coefficient((2, 0, 1, 0, 0)) == F(3, 2)
    g = parse_form("x1^2", n_hint=1)  # hint smaller than max index is ignored
    assert g.n == 1


def test_parse_combines_and_drops_zero_terms():
    f = parse_form("x1*x2 + x1*x2 - 2*x1*x2 + x2^2")
    assert len(f) == 1 and f.coefficient((0, 2)) == 1
    z = parse_form("x1 - x1")
    assert len(z) == 0 and z.degree == 1


def test_evaluate_examples(cyclic):
    assert cyclic.evaluate(ones(3)) == 0
    f = parse_form("x1^2 - 3*x1*x2 + x2^2")
    assert f.evaluate((F(1), F(1))) == -1
    assert f.evaluate((F(2), F(1))) == -1
    with pytest.raises(ValueError):
        f.evaluate((F(1),))


def test_trivially_positive(cyclic):
    assert parse_form("x1^2 + 2*x1*x2").is_trivially_positive()
    assert not cyclic.is_trivially_positive()
    zero = Form(2, {}, degree=3)
    assert zero.is_trivially_positive()
    assert not zero.is_trivially_negative()


def test_trivially_negative(cyclic):
    assert parse_form("x1^2 - 3*x1*x2 + x2^2").is_trivially_negative()
    assert not cyclic.is_trivially_negative()
    assert not parse_form("x2^2 - x1^2").is_trivially_negative()


def test_content_normalize_examples():
    assert parse_form("2*x1^2 - 4*x1*x2").content_normalized() == parse_form(
        "x1^2 - 2*x1*x2"
    )
    assert parse_form("1/2*x1^3 + 3/2*x2^3").content_normalized() == parse_form(
        "x1^3 + 3*x2^3"
    )
    f = parse_form("x1^2 - x2^2")
    assert f.content_normalized() == f


def test_content_normalize_idempotent_and_sign_preserving():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randint(1, 4)
        d = rng.randint(1, 5)
        f = Form(n, random_form_terms(rng, n, d, 6))
        g = f.content_normalized()
        assert g.content_normalized() == g
        assert {e: c > 0 for e, c in f.terms()} == {e: c > 0 for e, c in g.terms()}
        # coprime integer coefficients
        assert all(c.denominator == 1 for _, c in g.terms())


def test_construction_preserves_homogeneity_randomly():
    rng = random.Random(12)
    for _ in range(200):
        n = rng.randint(1, 4)
        d = rng.randint(1, 6)
        f = Form(n, random_form_terms(rng, n, d, 8))
        assert all(sum(e) == f.degree and len(e) == n for e, _ in f.terms())


def test_mixed_degree_construction_rejected():
    with pytest.raises(HomogeneityError):
        Form(2, {(1, 0): F(1), (1, 1): F(1)})


def test_evaluate_at_ones_is_coefficient_sum():
    rng = random.Random(13)
    for _ in range(100):
        n = rng.randint(1, 4)
        f = Form(n, random_form_terms(rng, n, rng.randint(1, 5), 6))
        assert f.evaluate(ones(n)) == f.coefficient_sum()


def test_trivially_positive_implies_nonnegative_on_orthant():
    rng = random.Random(14)
    forms = []
    while len(forms) < 10:
        n = rng.randint(1, 3)
        terms = {
            e: abs(c)
            for e, c in random_form_terms(rng, n, rng.randint(1, 4), 5).items()
        }
        forms.append(Form(n, terms))
    for f in forms:
        for _ in range(100):  # 1000 points spread over the form corpus
            assert f.evaluate(random_point(rng, f.n)) >= 0


def test_round_trip_canonical_text():
    rng = random.Random(15)
    for _ in range(150):
        n = rng.randint(1, 4)
        f = Form(n, random_form_terms(rng, n, rng.randint(1, 6), 7))
        assert parse_form(f.to_text(), n_hint=n) == f


def test_monomial_text():
    assert monomial_text((3, 1, 2)) == "x1^3*x2*x3^2"
    assert monomial_text((0, 0)) == "1"


def test_terms_iteration_is_descending_lex():
    f = parse_form("x2^2 + x1*x2 + x1^2")
    assert [e for e, _ in f.terms()] == [(2, 0), (1, 1), (0, 2)]


def test_forms_hash_and_equality():
    f = parse_form("x1^2 - x2^2")
    g = parse_form("-x2^2 + x1^2")
    assert f == g and hash(f) == hash(g)
    assert f != parse_form("x1^2 + x2^2")
