"""Linear complementary pairs of algebraic-geometry codes over small finite fields."""

from .gf import Field, FieldElement, field_new, gf
from .linalg import Matrix
from .codes import LinearCode, Budgets, BudgetExceeded
from .curve import Curve, Divisor, Point, elliptic_curve, projective_line, rational_points
from .rrspace import CurveFunction, Poly, rr_basis, ell
from .agcode import AgCodeSpec, LcpReport, evaluation_code, omega_code, check_lcp

__all__ = [
    "Field", "FieldElement", "field_new", "gf", "Matrix", "LinearCode", "Budgets", "BudgetExceeded",
    "Curve", "Divisor", "Point", "elliptic_curve", "projective_line", "rational_points",
    "CurveFunction", "Poly", "rr_basis", "ell", "AgCodeSpec", "LcpReport", "evaluation_code",
    "omega_code", "check_lcp",
]
