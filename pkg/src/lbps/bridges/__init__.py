"""Identities between the local series, relative invariants and quiver DT invariants."""

from .genus1 import genus1_engine, genus1_virasoro, genus1_wdvv, verify_genus1
from .nef import nef_counterexample, nef_local, nef_relative
from .quiver_checks import (
    bridge_classes,
    bridge_report,
    bridge_sweep,
    gw_side,
    quiver_side,
    section6_pairs,
    verify_gw_quiver,
    verify_small_resolution,
)
from .relative import RelativeSeries, bps_invariants, castelnuovo_check, local_to_relative
from .relgenus0 import (
    antisymmetric_identity,
    binomial_identity,
    fw_relative_recursion,
    local_relative_agree,
    relative_genus0,
    relative_genus0_recursion,
)

__all__ = [
    "genus1_engine", "genus1_virasoro", "genus1_wdvv", "verify_genus1",
    "nef_counterexample", "nef_local", "nef_relative",
    "bridge_classes", "bridge_report", "bridge_sweep", "gw_side", "quiver_side", "section6_pairs",
    "verify_gw_quiver", "verify_small_resolution",
    "RelativeSeries", "bps_invariants", "castelnuovo_check", "local_to_relative",
    "antisymmetric_identity", "binomial_identity", "fw_relative_recursion", "local_relative_agree",
    "relative_genus0", "relative_genus0_recursion",
]
