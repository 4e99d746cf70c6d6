"""Exact sparse homogeneous polynomials over the rationals.

A form of degree d in n variables is a finite sum of monomials
C * x1^a1 * ... * xn^an with a1 + ... + an == d for every term and C a
nonzero Fraction.  Terms live in a dict keyed by exponent tuples:

    x1^2 - 2*x1*x2 + x2^2  ->  {(2, 0): 1, (1, 1): -2, (0, 2): 1}

Zero-coefficient terms are never stored, so "all coefficients
nonnegative" can be tested by scanning stored values.  Iteration is in
descending lexicographic order (graded lex, since all terms share one
degree), which makes rendering, hashing and reports deterministic.

Everything here is exact rational arithmetic; no floating point enters
any code path that affects a verdict.  Forms and points are immutable
and safe to share between workers.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator, Mapping

Exponent = tuple[int, ...]
Point = tuple[Fraction, ...]


class ParseError(ValueError):
    """Syntax error in polynomial text; `position` is 1-based."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class HomogeneityError(ValueError):
    """Input mixes total degrees; carries two offending monomials."""

    def __init__(self, first: str, first_degree: int, second: str, second_degree: int):
        super().__init__(
            f"inhomogeneous input: term {first} has degree {first_degree} "
            f"but term {second} has degree {second_degree}"
        )
        self.terms = (first, second)


def monomial_text(exponent: Exponent) -> str:
    """Render an exponent tuple as a monomial, e.g. (3, 1, 2) -> 'x1^3*x2*x3^2'."""
    factors = []
    for i, e in enumerate(exponent, start=1):
        if e == 1:
            factors.append(f"x{i}")
        elif e > 1:
            factors.append(f"x{i}^{e}")
    return "*".join(factors) if factors else "1"


def _coeff_text(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


class Form:
    """An immutable homogeneous polynomial with exact rational coefficients."""

    __slots__ = ("n", "degree", "_terms", "_items")

    def __init__(
        self,
        n: int,
        terms: Mapping[Exponent, Fraction] | Iterable[tuple[Exponent, Fraction]],
        degree: int | None = None,
    ):
        if n < 1:
            raise ValueError(f"variable count must be >= 1, got {n}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        combined: dict[Exponent, Fraction] = {}
        for exponent, coeff in items:
            exponent = tuple(int(e) for e in exponent)
            if len(exponent) != n:
                raise ValueError(
                    f"exponent {exponent} has length {len(exponent)}, expected {n}"
                )
            if any(e < 0 for e in exponent):
                raise ValueError(f"negative exponent in {exponent}")
            combined[exponent] = combined.get(exponent, Fraction(0)) + Fraction(coeff)
        combined = {e: c for e, c in combined.items() if c != 0}
        degrees = {sum(e) for e in combined}
        if len(degrees) > 1:
            lo, hi = min(degrees), max(degrees)
            first = next(e for e in combined if sum(e) == lo)
            second = next(e for e in combined if sum(e) == hi)
            raise HomogeneityError(monomial_text(first), lo, monomial_text(second), hi)
        if degrees:
            d = degrees.pop()
            if degree is not None and degree != d:
                raise ValueError(f"declared degree {degree} but terms have degree {d}")
        else:
            d = degree if degree is not None else 0
        self.n = n
        self.degree = d
        self._terms = combined
        self._items = tuple(sorted(combined.items(), key=lambda kv: kv[0], reverse=True))

    def terms(self) -> Iterator[tuple[Exponent, Fraction]]:
        """Yield (exponent, coefficient) pairs in descending lex order."""
        return iter(self._items)

    def coefficient(self, exponent: Exponent) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def __contains__(self, exponent: Exponent) -> bool:
        return tuple(exponent) in self._terms

    def __len__(self) -> int:
        return len(self._items)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return self.n == other.n and self._items == other._items

    def __hash__(self) -> int:
        return hash((self.n, self._items))

    def __repr__(self) -> str:
        return f"Form({self.n}, {self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self) -> str:
        """Canonical text rendering; `parse_form` round-trips it exactly."""
        if not self._items:
            return "0"
        pieces = []
        for exponent, coeff in self._items:
            mono = monomial_text(exponent)
            mag = abs(coeff)
            body = mono if mag == 1 and any(exponent) else (
                _coeff_text(mag) if not any(exponent) else f"{_coeff_text(mag)}*{mono}"
            )
            pieces.append(("- " if coeff < 0 else "+ ") + body)
        out = " ".join(pieces)
        return "-" + out[2:] if out.startswith("- ") else out[2:]

    def evaluate(self, point: Iterable[Fraction]) -> Fraction:
        """Exact value at a rational point (any signs allowed)."""
        values = tuple(Fraction(v) for v in point)
        if len(values) != self.n:
            raise ValueError(f"point has {len(values)} coordinates, expected {self.n}")
        total = Fraction(0)
        for exponent, coeff in self._items:
            term = coeff
            for v, e in zip(values, exponent):
                if e:
                    term *= v**e
            total += term
        return total

    def coefficient_sum(self) -> Fraction:
        """Value at the all-ones point."""
        return sum((c for _, c in self._items), Fraction(0))

    def is_trivially_positive(self) -> bool:
        """True iff no stored coefficient is negative (zero form included)."""
        return all(c > 0 for _, c in self._items)

    def is_trivially_negative(self) -> bool:
        """True iff the coefficient sum (value at all-ones) is negative."""
        return self.coefficient_sum() < 0

    def content_normalized(self) -> Form:
        """Scale by the positive content so coefficients are coprime integers.

        Positive scaling preserves the sign pattern and nonnegativity on
        the orthant; the result is the canonical representative used as a
        deduplication key.  The zero form is returned unchanged.
        """
        if not self._items:
            return self
        nums = gcd(*(abs(c.numerator) for _, c in self._items))
        dens = lcm(*(c.denominator for _, c in self._items))
        content = Fraction(nums, dens)
        if content == 1:
            return self
        return Form(
            self.n,
            [(e, c / content) for e, c in self._items],
            degree=self.degree,
        )

def ones(n: int) -> Point:
    return (Fraction(1),) * n


def as_point(values: Iterable[Fraction]) -> Point:
    """Validate a point of the nonnegative orthant."""
    point = tuple(Fraction(v) for v in values)
    if any(v < 0 for v in point):
        raise ValueError(f"point {point} has a negative coordinate")
    return point


# ---------------------------------------------------------------------------
# Parsing.
#
# Grammar (whitespace ignored everywhere):
#   expression ::= term (('+'|'-') term)*        leading sign allowed
#   term       ::= [coeff '*'] factor ('*' factor)*
#   factor     ::= 'x' INDEX ['^' EXPONENT]      INDEX >= 1, EXPONENT >= 0
#   coeff      ::= INTEGER | INTEGER '/' INTEGER
# ---------------------------------------------------------------------------


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str | None:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def take(self) -> str:
        ch = self.peek()
        assert ch is not None
        self.pos += 1
        return ch

    def here(self) -> int:
        self.skip_ws()
        return self.pos + 1  # 1-based for messages

    def integer(self, what: str) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError(f"expected {what}", start + 1)
        return int(self.text[start : self.pos])


def _parse_term(tok: _Tokens) -> tuple[Fraction, dict[int, int]]:
    """One signless term: optional coefficient, then factors."""
    coeff = Fraction(1)
    ch = tok.peek()
    if ch is not None and ch.isdigit():
        at = tok.here()
        num = tok.integer("integer coefficient")
        den = 1
        if tok.peek() == "/":
            tok.take()
            den = tok.integer("denominator")
            if den == 0:
                raise ParseError("zero denominator in coefficient", at)
        coeff = Fraction(num, den)
        if tok.peek() != "*":
            raise ParseError("expected '*' after coefficient", tok.here())
        tok.take()
    exponents: dict[int, int] = {}
    while True:
        at = tok.here()
        if tok.peek() != "x":
            raise ParseError("expected variable like 'x1'", at)
        tok.take()
        index = tok.integer("variable index after 'x'")
        if index == 0:
            raise ParseError("variable index must be >= 1", at)
        power = 1
        if tok.peek() == "^":
            tok.take()
            power = tok.integer("exponent after '^'")
        exponents[index] = exponents.get(index, 0) + power
        if tok.peek() == "*":
            tok.take()
            continue
        break
    return coeff, exponents


def parse_form(text: str, n_hint: int | None = None) -> Form:
    """Parse polynomial text into a Form.

    The variable count is the largest index seen, unless `n_hint` is
    larger.  Terms are combined and zero coefficients dropped; mixed
    total degrees raise HomogeneityError.
    """
    tok = _Tokens(text)
    if tok.peek() is None:
        raise ParseError("empty input", 1)
    parsed: list[tuple[Fraction, dict[int, int]]] = []
    sign = Fraction(1)
    if tok.peek() in "+-":
        sign = Fraction(-1) if tok.take() == "-" else Fraction(1)
    while True:
        coeff, exponents = _parse_term(tok)
        parsed.append((sign * coeff, exponents))
        ch = tok.peek()
        if ch is None:
            break
        if ch not in "+-":
            raise ParseError(f"unexpected character {ch!r}", tok.here())
        sign = Fraction(-1) if tok.take() == "-" else Fraction(1)

    n = max(max(e) for _, e in parsed)
    if n_hint is not None and n_hint > n:
        n = n_hint

    first_exp: Exponent | None = None
    terms: list[tuple[Exponent, Fraction]] = []
    for coeff, exponents in parsed:
        exp = tuple(exponents.get(i, 0) for i in range(1, n + 1))
        if first_exp is None:
            first_exp = exp
        elif sum(exp) != sum(first_exp):
            raise HomogeneityError(
                monomial_text(first_exp), sum(first_exp), monomial_text(exp), sum(exp)
            )
        terms.append((exp, coeff))
    assert first_exp is not None
    return Form(n, terms, degree=sum(first_exp))
