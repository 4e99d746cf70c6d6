from __future__ import annotations

import pytest

from sdscheck import parse_form

CYCLIC_TEXT = (
    "x1^4*x2^2 - x1^3*x2*x3^2 + x2^4*x3^2 - x1^2*x2^3*x3 + x1^2*x3^4 - x1*x2^2*x3^3"
)


@pytest.fixture(scope="session")
def cyclic():
    """The cyclic sextic whose substitution search never terminates."""
    return parse_form(CYCLIC_TEXT)
