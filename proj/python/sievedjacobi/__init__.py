"""Sieved Jacobi polynomials: exact construction and verification.

Thin re-export of the compiled core; all exact values travel as 'p/q'
strings so nothing is lost at the language boundary.
"""

from ._core import (
    bannai_ito_diagonal,
    eigencheck_prl,
    eigencheck_psi,
    gram_circle,
    phi_coeffs,
    prl_coeffs,
    psi_json,
    selfadjointness_defect,
    verblunsky,
    verify_identities,
)

__all__ = [
    "bannai_ito_diagonal",
    "eigencheck_prl",
    "eigencheck_psi",
    "gram_circle",
    "phi_coeffs",
    "prl_coeffs",
    "psi_json",
    "selfadjointness_defect",
    "verblunsky",
    "verify_identities",
]
