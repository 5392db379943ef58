"""Quivers, Harder-Narasimhan counts, refined DT invariants and the three quiver families."""

from .dt import (
    DtInvariant,
    dt_invariant,
    projective_space_poly,
    ray_vectors,
    stack_dt_invariant,
    stack_dt_invariants,
)
from .families import (
    C,
    F,
    L,
    family_moduli,
    family_quiver,
    family_vector,
    framed_family,
    framing_degree,
    framing_vector,
    local_quiver,
    quiver_data,
)
from .hn import (
    DEFAULT_BUDGET,
    clear_cache,
    expected_dimension,
    hn_counting,
    moduli_count,
    sst_count,
)
from .keyrel import closed_form_check, framed_side, keyrel_case, verify_framed_identity
from .plethysm import ADAMS_MODES, MultiSeries, XAndV, XOnly, plethystic_exp, plethystic_log
from .qdtrec import default_seeds, qdt_recursion
from .quiver import (
    DimVector,
    Quiver,
    Stability,
    antiattractor,
    antisym_form,
    euler_form,
    framed,
    is_coprime,
    parse_vector,
    reflect_dim,
    slope,
    sym_form,
)

__all__ = [
    "DtInvariant", "dt_invariant", "projective_space_poly", "ray_vectors",
    "stack_dt_invariant", "stack_dt_invariants",
    "C", "F", "L", "family_moduli", "family_quiver", "family_vector", "framed_family",
    "framing_degree", "framing_vector", "local_quiver", "quiver_data",
    "DEFAULT_BUDGET", "clear_cache", "expected_dimension", "hn_counting", "moduli_count", "sst_count",
    "closed_form_check", "framed_side", "keyrel_case", "verify_framed_identity",
    "ADAMS_MODES", "MultiSeries", "XAndV", "XOnly", "plethystic_exp", "plethystic_log",
    "default_seeds", "qdt_recursion",
    "DimVector", "Quiver", "Stability", "antiattractor", "antisym_form", "euler_form", "framed",
    "is_coprime", "parse_vector", "reflect_dim", "slope", "sym_form",
]
