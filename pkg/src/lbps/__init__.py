"""Exact all-genus GW series, BPS invariants and quiver DT invariants of local surfaces."""

__version__ = "0.1.0"
