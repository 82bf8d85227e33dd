"""Exact r-Lah numbers, r-extended Lah-Bell numbers and polynomials."""

from .egf import TruncSeries, egf_of
from .polynomials import ExactPoly, bell_poly, r_lah_bell_poly
from .tables import (
    NumberSequence,
    NumberTriangle,
    r_lah_bell_numbers,
    r_lah_closed,
    r_lah_triangle,
)

__all__ = [
    "ExactPoly",
    "NumberSequence",
    "NumberTriangle",
    "TruncSeries",
    "bell_poly",
    "egf_of",
    "r_lah_bell_numbers",
    "r_lah_bell_poly",
    "r_lah_closed",
    "r_lah_triangle",
]
