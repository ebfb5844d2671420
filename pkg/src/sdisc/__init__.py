"""Exact subdiscriminants of symmetric matrices and sum-of-squares certificates."""

__version__ = "0.1.0"

from .exactmath import MultiPoly, RationalMatrix, format_scalar
from .subdisc import classify, sdisc_from_roots, sdisc_of_matrix, sdisc_symbolic, sdisc_vector
from .covariant import compute_Tk, emit_certificate, verify_certificate
from .repdim import HighestWeight, mu_bound, weyl_dim

__all__ = [
    "MultiPoly",
    "RationalMatrix",
    "format_scalar",
    "classify",
    "sdisc_from_roots",
    "sdisc_of_matrix",
    "sdisc_symbolic",
    "sdisc_vector",
    "compute_Tk",
    "emit_certificate",
    "verify_certificate",
    "HighestWeight",
    "mu_bound",
    "weyl_dim",
]
