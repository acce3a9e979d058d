"""Semi-infinite quadrature via compactification.

The half line [0, inf) is mapped to v in [0, 1) with the same two-stage
map the interpolation grid uses (u = p/(1+p), u = 1 - (1-v)^3, so
q = (1-v)^{-3} - 1 and dq = 3 (1-v)^{-4} dv), and integrated with a
composite Gauss-Legendre rule whose panels refine dyadically toward
v = 1.  Sharing the map with the grid keeps the interpolated coefficient
functions smooth in the integration variable; the dyadic panels resolve
the log(1-v)-type tail behaviour, and tail truncation is absent.

eval_subtracted provides difference quotients (g(q) - g(q0))/(q - q0)
that stay accurate through q = q0 by switching to a divided-difference
model of g near the base point.
"""

from dataclasses import dataclass

import numpy as np

from .cheb import TAIL_EXPONENT


@dataclass(frozen=True)
class QuadratureRule:
    """Composite Gauss-Legendre rule on [0,1], compactified to [0,inf)."""
    panels: int
    points_per_panel: int
    v_nodes: np.ndarray      # nodes in (0,1), strictly increasing
    v_weights: np.ndarray    # weights for integration in v over [0,1]
    q_nodes: np.ndarray      # mapped momenta
    q_weights: np.ndarray    # v_weights times the Jacobian dq/dv

    def __len__(self):
        return self.v_nodes.size


def make_rule(panels, points):
    """Build a rule with `panels` dyadically refined panels of `points`
    Gauss-Legendre points each."""
    if not (isinstance(panels, (int, np.integer)) and panels >= 1):
        raise ValueError(f"panels must be a positive integer, got {panels!r}")
    if not (isinstance(points, (int, np.integer)) and points >= 2):
        raise ValueError(f"points must be an integer >= 2, got {points!r}")
    x, w = np.polynomial.legendre.leggauss(int(points))
    # dyadic refinement toward v = 1 resolves the slowly decaying tail
    # under the compactification
    bounds = [0.0] + [1.0 - 0.5 ** k for k in range(1, panels)] + [1.0]
    vn, vw = [], []
    for a, b in zip(bounds[:-1], bounds[1:]):
        vn.append(0.5 * (b - a) * (x + 1.0) + a)
        vw.append(0.5 * (b - a) * w)
    v = np.concatenate(vn)
    wv = np.concatenate(vw)
    one_minus = 1.0 - v
    q = one_minus ** (-TAIL_EXPONENT) - 1.0
    wq = wv * TAIL_EXPONENT * one_minus ** (-TAIL_EXPONENT - 1)
    return QuadratureRule(int(panels), int(points), v, wv, q, wq)


def integrate(rule, f):
    """Integrate f over [0, inf) with the compactified rule.

    f may be a callable of a scalar q or of a vector of q nodes.
    """
    try:
        vals = np.asarray(f(rule.q_nodes), dtype=float)
        if vals.shape != rule.q_nodes.shape:
            raise TypeError
    except (TypeError, ValueError):
        vals = np.array([float(f(q)) for q in rule.q_nodes])
    if not np.all(np.isfinite(vals)):
        k = int(np.argmax(~np.isfinite(vals)))
        raise ArithmeticError(
            f"integrand not finite at node q={rule.q_nodes[k]!r} "
            f"(value {vals[k]!r})")
    return float(rule.q_weights @ vals)


def integrate_with_error(rule, f):
    """Integral plus an error estimate from doubling the point count."""
    fine = make_rule(rule.panels, 2 * rule.points_per_panel)
    a = integrate(rule, f)
    b = integrate(fine, f)
    return b, abs(a - b)


def eval_subtracted(g, q0, q, threshold_scale=1e-4, stencil_scale=1e-3):
    """Difference quotient (g(q) - g(q0)) / (q - q0), finite at q = q0.

    Away from the base point the quotient is taken directly.  Within
    |q - q0| <= threshold_scale*(1+q0) the direct quotient loses more
    than half the mantissa, so the quotient of the degree-4 polynomial
    interpolating g near q0 is used instead (a Newton divided-difference
    form anchored at q0, so the two branches agree to ~1e-8 at the
    switchover).
    """
    q0 = float(q0)
    q = float(q)
    thr = threshold_scale * (1.0 + abs(q0))
    if abs(q - q0) > thr:
        return (g(q) - g(q0)) / (q - q0)
    h = stencil_scale * (1.0 + abs(q0))
    if q0 >= 2.0 * h:
        xs = [q0 - 2.0 * h, q0 - h, q0 + h, q0 + 2.0 * h]
    else:
        xs = [q0 + h, q0 + 2.0 * h, q0 + 3.0 * h, q0 + 4.0 * h]
    nodes = [q0] + xs
    vals = [g(x) for x in nodes]
    return _dd_quotient(nodes, vals, q)


def _dd_quotient(nodes, vals, q):
    # Newton divided differences with nodes[0] = q0 first; the quotient
    # (P(q) - P(q0))/(q - q0) is then the polynomial
    #   dd[1] + dd[2](q-x1) + dd[3](q-x1)(q-x2) + ...
    n = len(nodes)
    dd = list(vals)
    table = [dd[0]]
    for level in range(1, n):
        for i in range(n - level):
            dd[i] = (dd[i + 1] - dd[i]) / (nodes[i + level] - nodes[i])
        table.append(dd[0])
    acc = 0.0
    prod = 1.0
    for level in range(1, n):
        acc += table[level] * prod
        prod *= (q - nodes[level])
    return acc
