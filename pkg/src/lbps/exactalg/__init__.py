"""Exact arithmetic: Laurent polynomials, the S-form of BPS series, h-series, q-expressions."""

from .laurent import InexactDivision, Laurent, RationalFunction, poly_gcd
from .hseries import HSeries, sin_ratio, two_sin_half
from .spoly import (
    BpsPolynomial,
    NotInSImage,
    SPoly,
    SymLaurent,
    chebyshev_c,
    h_expand,
    laurent_to_s_form,
    quantum_integer_squared,
    s_form_to_laurent,
    spoly_from_q,
    spoly_to_q,
    sym_from_q,
)
from .qparse import bps_q_parts, format_bps_q, format_sym, parse_q_expression

# Harder-Narasimhan intermediate values are rational functions of q
QRationalFunction = RationalFunction

__all__ = [
    "InexactDivision", "Laurent", "RationalFunction", "QRationalFunction", "poly_gcd",
    "HSeries", "sin_ratio", "two_sin_half",
    "BpsPolynomial", "NotInSImage", "SPoly", "SymLaurent", "chebyshev_c", "h_expand",
    "laurent_to_s_form", "quantum_integer_squared", "s_form_to_laurent",
    "sym_from_q", "spoly_from_q", "spoly_to_q",
    "bps_q_parts", "format_bps_q", "format_sym", "parse_q_expression",
]
