"""Exact polarization and Hilbert-ideal toolkit for permutation-group invariants."""
from .fields import GF, QQ, Field, FieldError
from .kernels import BACKEND
from .polyring import (DimensionError, Monomial, MonomialOrder, Polynomial, compare,
                       lead_monomial, parse_polynomial)

__version__ = "0.1.0"

__all__ = [
    "GF", "QQ", "Field", "FieldError", "BACKEND", "DimensionError", "Monomial",
    "MonomialOrder", "Polynomial", "compare", "lead_monomial", "parse_polynomial",
]
