"""Exact nonnegativity checking on the nonnegative orthant.

Core pieces: exact homogeneous polynomials (`forms`), substitution
matrices and expansion (`subst`), the majorization order with the
termination pre-check (`majorization`), and the breadth-first
substitution search (`search`).  The `service` subpackage wraps it all
in a FastAPI app; `cli` is a thin command-line client.
"""

from .forms import Form, HomogeneityError, ParseError, monomial_text, parse_form
from .majorization import (
    MajorizationReport,
    majorizes,
    majorizes_under,
    necessary_condition,
    persistent_coefficient,
    separating_point,
)
from .search import (
    INCONCLUSIVE,
    NOT_PSD,
    PSD,
    SearchStats,
    Verdict,
    Witness,
    run_search,
    witness_point,
)
from .subst import (
    Permutation,
    Template,
    TooManyVariablesError,
    apply_substitution,
    reciprocal_template,
    substitution_images,
    substitution_matrix,
    uniform_template,
)

__version__ = "0.1.0"

__all__ = [
    "Form",
    "HomogeneityError",
    "INCONCLUSIVE",
    "MajorizationReport",
    "NOT_PSD",
    "PSD",
    "ParseError",
    "Permutation",
    "SearchStats",
    "Template",
    "TooManyVariablesError",
    "Verdict",
    "Witness",
    "apply_substitution",
    "majorizes",
    "majorizes_under",
    "monomial_text",
    "necessary_condition",
    "parse_form",
    "persistent_coefficient",
    "reciprocal_template",
    "run_search",
    "separating_point",
    "substitution_images",
    "substitution_matrix",
    "uniform_template",
    "witness_point",
    "__version__",
]
