"""All-genus recursion for the local series F_beta, its initial data and the genus-0 slice."""

from .engine import (
    SeriesTable,
    binom,
    compute_series,
    compute_series_laurent,
    default_table,
    dual_path_agrees,
    genus0,
)
from .initial import (
    KRONECKER2_CONVENTIONS,
    PLETHYSTIC,
    TABLE,
    initial_series,
    is_initial,
    kronecker2_coefficient_q,
    kronecker2_framed_coefficient,
)

__all__ = [
    "SeriesTable", "binom", "compute_series", "compute_series_laurent", "default_table",
    "dual_path_agrees", "genus0",
    "KRONECKER2_CONVENTIONS", "PLETHYSTIC", "TABLE", "initial_series", "is_initial",
    "kronecker2_coefficient_q", "kronecker2_framed_coefficient",
]
