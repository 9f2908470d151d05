"""Exact motivic zeta functions in a Grothendieck-ring model with lambda-ring calculus."""
from .errors import DomainError, MZetaError, TruncationError, UsageError

__version__ = "0.1.0"

from .algebra import MultiPoly, PowerSeries, VarTable, parse_poly  # noqa: E402
from .cache import UniversalCache  # noqa: E402
from .document import MotiveDocument, load_document  # noqa: E402
from .k0 import AtomSpec, K0Element, K0Ring, Relation, verify_special_pair  # noqa: E402
from .symfunc import SymFunc, parse_symfunc, plethysm  # noqa: E402
from .universal import elementary_reduce, q_poly, universal_P, universal_Pnr, verify_q_fe  # noqa: E402
from .zeta import (  # noqa: E402
    FEReport,
    Motive,
    ZetaFunction,
    abelian_motive,
    blowup_motive,
    check_fe,
    curve_motive,
    product_motive,
    rational_form,
    verify_abelian,
    verify_blowup,
    verify_curve,
    verify_product,
    zeta_series,
)

__all__ = [
    "AtomSpec", "DomainError", "FEReport", "K0Element", "K0Ring", "MZetaError", "Motive",
    "MotiveDocument", "MultiPoly", "PowerSeries", "Relation", "SymFunc", "TruncationError",
    "UniversalCache", "UsageError", "VarTable", "ZetaFunction", "abelian_motive", "blowup_motive",
    "check_fe", "curve_motive", "elementary_reduce", "load_document", "parse_poly", "parse_symfunc",
    "plethysm", "product_motive", "q_poly", "rational_form", "universal_P", "universal_Pnr",
    "verify_abelian", "verify_blowup", "verify_curve", "verify_product", "verify_q_fe",
    "verify_special_pair", "zeta_series",
]
