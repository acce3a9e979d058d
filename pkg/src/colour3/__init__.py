"""Perturbative solver for the planar 2-point function of the
3-colour scalar matrix model.

The closed integral equation for the planar 2-point function is solved
order by order in the coupling: `recursion` runs the scheme on a
compactified Chebyshev grid, `closedforms` carries the exact low-order
coefficients used as oracles, `ribbon` enumerates the contributing
coloured ribbon graphs at the lowest orders, and `cli` exposes the
command-line front end.
"""

from . import cheb, closedforms, polylog, quad, recursion, ribbon
from .cheb import MomentumGrid
from .closedforms import g0, g2, g4, g6, gp6_diag, zero_momentum_coefficients
from .polylog import li2, li3
from .quad import integrate, make_rule
from .recursion import (compute_orders, diagonal, eval_series, g00_series,
                        g00_series_with_errors)
from .ribbon import RibbonGraph, amplitude, enumerate_2pt, resum

__version__ = "0.1.0"

__all__ = [
    "MomentumGrid", "RibbonGraph", "amplitude", "cheb", "closedforms",
    "compute_orders", "diagonal", "enumerate_2pt", "eval_series", "g0",
    "g00_series", "g00_series_with_errors", "g2", "g4", "g6", "gp6_diag",
    "integrate", "li2", "li3", "make_rule", "polylog", "quad", "recursion",
    "resum", "ribbon", "zero_momentum_coefficients",
]
