"""Exact arithmetic for spin q-Whittaker polynomials and spin Hall-Littlewood functions."""
from .contour import ContourSpec, hl_G_integral, qw_integral
from .errors import PreconditionError
from .identities import IDENTITIES, IdentityReport
from .partitions import conjugate, make_partition
from .spin_hl import hl_F, hl_G, hl_G_star, stable_F, stable_F_star
from .spin_qw import qw_F, qw_F_star

__version__ = "0.1.0"

__all__ = [
    "ContourSpec", "IDENTITIES", "IdentityReport", "PreconditionError", "conjugate", "hl_F",
    "hl_G", "hl_G_star", "hl_G_integral", "make_partition", "qw_F", "qw_F_star", "qw_integral",
    "stable_F", "stable_F_star",
]
