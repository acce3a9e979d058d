"""Perturbative recursion for the planar 2-point function.

The coefficient of lambda^{2n} satisfies, for n >= 1,

  G_{2n}(p1,p2) = [ 3 sum_{i=0}^{n-1} G_{2(n-1-i)}(p1,p2)
                        * int dq ( G_{2i}(q,p2) - G_{2i}(p1,q) )
                    - int dq ( G_{2n-2}(p1,q) - G_{2n-2}(p1,p2) ) / (q-p2)
                    + int dq ( G_{2n-2}(p2,q) - G_{2n-2}(p1,p2) ) / (q-p1) ]
                  / ( (1+p1+p2)(p1-p2) ),

seeded with G_0 = 1/(1+p1+p2).  The factor 3 counts the internal colour
sum.  Coefficients are represented by their values on a tensor Chebyshev
grid (see cheb) and integrals are evaluated with the compactified rule
(see quad).  The right hand side is assembled in matrix form over all
node pairs at once; entries where a quadrature node falls close to a
grid momentum are patched with a local divided-difference quotient, and
the diagonal (where the prefactor is 0/0) is filled by evaluating the
right hand side at off-diagonal pairs and extrapolating to the diagonal.
"""

from dataclasses import dataclass, field

import numpy as np

from .cheb import MomentumGrid, Interp2D
from .quad import QuadratureRule, make_rule

COLOUR_FACTOR = 3.0

# quotient entries closer to the pole than this (relative) are patched
_PATCH_THRESHOLD = 1e-4
_STENCIL_SCALE = 1e-3


@dataclass
class OrderCoefficient:
    """Grid representation of the lambda^{2n} coefficient."""
    order: int
    grid: MomentumGrid
    values: np.ndarray              # (m, m), symmetric
    asymmetry: float = 0.0          # max |V - V^T| before symmetrization
    interp: Interp2D = field(init=False, repr=False)

    def __post_init__(self):
        self.interp = Interp2D(self.grid, self.values)

    def __call__(self, p1, p2):
        return self.interp(p1, p2)


def seed(grid):
    """Order 0: G_0 = 1/(1+p1+p2) on the grid."""
    # sum the two momenta first so the array is bit-exact symmetric
    v = 1.0 / (1.0 + (grid.p[:, None] + grid.p[None, :]))
    return OrderCoefficient(0, grid, v)


def _dd_quotient_rows(nodes, vals, q):
    """Vectorized Newton divided-difference quotient.

    nodes: (5,) stencil with nodes[0] the subtraction point, vals: (5, m)
    samples of g at the stencil for m functions, q: scalar evaluation
    point.  Returns (m,) values of (g(q) - g(nodes[0]))/(q - nodes[0]).
    """
    n = len(nodes)
    dd = [v.copy() for v in vals]
    table = []
    for level in range(1, n):
        for i in range(n - level):
            dd[i] = (dd[i + 1] - dd[i]) / (nodes[i + level] - nodes[i])
        table.append(dd[0].copy())
    acc = np.zeros_like(vals[0])
    prod = 1.0
    for level in range(1, n):
        acc += table[level - 1] * prod
        prod *= (q - nodes[level])
    return acc


def _subtracted_integral_matrix(coef, rule, M):
    """J[x, y] = int dq ( G(p_y, q) - G(p_y, p_x) ) / (q - p_x).

    M[k, y] = G(q_k, p_y) are the coefficient's values on the quadrature
    nodes (precomputed).  Entries with q_k close to p_x are replaced by a
    divided-difference quotient of the interpolant.
    """
    grid = coef.grid
    p = grid.p
    q = rule.q_nodes
    wq = rule.q_weights
    V = coef.values
    D = q[None, :] - p[:, None]                       # (m, Q)
    thr = _PATCH_THRESHOLD * (1.0 + p)[:, None]
    near = np.abs(D) < thr
    Dsafe = np.where(near, 1.0, D)
    K = wq[None, :] / Dsafe
    K[near] = 0.0
    c1 = K.sum(axis=1)                                # sum_k wq_k/(q_k-p_x)
    J = K @ M - c1[:, None] * V
    # patch the excluded (x, k) entries with a local polynomial quotient
    for x, k in zip(*np.nonzero(near)):
        p_x = p[x]
        h = _STENCIL_SCALE * (1.0 + p_x)
        if p_x >= 2.0 * h:
            xs = [p_x - 2*h, p_x - h, p_x + h, p_x + 2*h]
        else:
            xs = [p_x + h, p_x + 2*h, p_x + 3*h, p_x + 4*h]
        nodes = [p_x] + xs
        # G(p_y, s) for stencil points s, all y at once; row x of V is
        # G(p_x, p_y) = value at s = p_x
        vals = [V[x]] + [coef.interp.eval_nodes_x(np.array([s]))[0] for s in xs]
        J[x] += wq[k] * _dd_quotient_rows(nodes, vals, q[k])
    return J


def _pair_rhs(coeffs, rule, P1, P2):
    """Recursion right hand side at arbitrary off-diagonal pairs.

    P1, P2 are equal-length arrays with P1[b] != P2[b]; only the lower
    order coefficients in coeffs are consulted, so this can evaluate the
    next order anywhere, not just on grid nodes.
    """
    grid = coeffs[0].grid
    n = len(coeffs)
    q = rule.q_nodes
    wq = rule.q_weights
    P1 = np.asarray(P1, dtype=float)
    P2 = np.asarray(P2, dtype=float)
    Aq = grid.interp_matrix_p(q)                # (Q, m)
    A1 = grid.interp_matrix_p(P1)               # (B, m)
    A2 = grid.interp_matrix_p(P2)
    s_pair = 1.0 + P1 + P2
    a_diff = []
    g_pair = []
    rows1 = rows2 = None
    for i, c in enumerate(coeffs):
        W = c.interp._w
        R1 = (A1 @ W @ Aq.T) / (1.0 + P1[:, None] + q[None, :])  # G(P1, q)
        R2 = (A2 @ W @ Aq.T) / (1.0 + P2[:, None] + q[None, :])  # G(P2, q)
        a_diff.append(R2 @ wq - R1 @ wq)
        g_pair.append(np.einsum("bi,ij,bj->b", A1, W, A2) / s_pair)
        if i == n - 1:
            rows1, rows2 = R1, R2
    T1 = np.zeros_like(P1)
    for i in range(n):
        T1 += g_pair[n - 1 - i] * a_diff[i]
    T1 *= COLOUR_FACTOR

    top = coeffs[-1]
    base = g_pair[n - 1]

    def sub_int(rows, poles, others):
        # int dq (G(other, q) - G(P1,P2)) / (q - pole), rows = G(other, q)
        out = np.empty_like(poles)
        for b in range(poles.size):
            pb = poles[b]
            thr = _PATCH_THRESHOLD * (1.0 + pb)
            D = q - pb
            far = np.abs(D) >= thr
            out[b] = wq[far] @ ((rows[b, far] - base[b]) / D[far])
            for k in np.nonzero(~far)[0]:
                h = _STENCIL_SCALE * (1.0 + pb)
                if pb >= 2.0 * h:
                    xs = [pb - 2*h, pb - h, pb + h, pb + 2*h]
                else:
                    xs = [pb + h, pb + 2*h, pb + 3*h, pb + 4*h]
                vals = [np.array([base[b]])] + [
                    np.array([float(top(others[b], x))]) for x in xs]
                out[b] += wq[k] * float(
                    _dd_quotient_rows([pb] + xs, vals, q[k])[0])
        return out

    T2 = -sub_int(rows1, P2, P1) + sub_int(rows2, P1, P2)
    return (T1 + T2) / (s_pair * (P1 - P2))


_DIAG_OFFSET_SCALE = 1e-2


def _fill_diagonal(coeffs, rule, V):
    """Fill V's diagonal by extrapolating the recursion right hand side.

    The prefactor 1/(p1-p2) makes the assembled matrix meaningless on
    the diagonal, but the right hand side has a finite limit there; it
    is evaluated at pairs (p+delta, p-delta) and Neville-extrapolated to
    delta = 0 (in delta^2, the leading behaviour by symmetry).  Nodes
    too close to 0 for symmetric offsets use one-sided pairs instead.
    """
    grid = coeffs[0].grid
    p = grid.p
    offsets = []
    pairs1, pairs2 = [], []
    for j in range(grid.m):
        h = _DIAG_OFFSET_SCALE * (1.0 + p[j])
        ds = [h, h / 2.0, h / 4.0, h / 8.0]
        if p[j] >= h:
            offsets.append([d * d for d in ds])
            for d in ds:
                pairs1.append(p[j] + d)
                pairs2.append(p[j] - d)
        else:
            offsets.append(ds)
            for d in ds:
                pairs1.append(p[j])
                pairs2.append(p[j] + d)
    vals = _pair_rhs(coeffs, rule, np.array(pairs1), np.array(pairs2))
    for j in range(grid.m):
        xs = offsets[j]
        ys = list(vals[4 * j: 4 * j + 4])
        for level in range(1, 4):
            for i in range(4 - level):
                ys[i] = (ys[i] * xs[i + level] - ys[i + 1] * xs[i]) / (
                    xs[i + level] - xs[i])
        V[j, j] = ys[0]
    return V


def step(coeffs, rule, colour_factor=COLOUR_FACTOR):
    """Compute the next order coefficient from the list of lower orders.

    coeffs must be [G_0, G_2, ..., G_{2(n-1)}] on a common grid; returns
    G_{2n}.  colour_factor replaces the physical 3 for consistency
    checks (a wrong factor must visibly break agreement with the closed
    forms, so it is an argument rather than a constant buried here).
    """
    if not coeffs:
        raise ValueError("need at least the order-0 seed")
    grid = coeffs[0].grid
    n = len(coeffs)
    p = grid.p
    q = rule.q_nodes
    wq = rule.q_weights

    Ms = [c.interp.eval_nodes_x(q) for c in coeffs]    # M_i[k, j] = G_2i(q_k, p_j)
    a = [wq @ M for M in Ms]                           # a_i[j] = int G_2i(q, p_j) dq

    # 3 * sum_i G_{2(n-1-i)}(p1,p2) * (a_i[p2] - a_i[p1])
    T1 = np.zeros((grid.m, grid.m))
    for i in range(n):
        T1 += coeffs[n - 1 - i].values * (a[i][None, :] - a[i][:, None])
    T1 *= colour_factor

    J = _subtracted_integral_matrix(coeffs[-1], rule, Ms[-1])
    T2 = J - J.T

    s = 1.0 + p[:, None] + p[None, :]
    d = p[:, None] - p[None, :]
    np.fill_diagonal(d, 1.0)
    V = (T1 + T2) / (s * d)
    np.fill_diagonal(V, 0.0)
    V = _fill_diagonal(coeffs, rule, V)
    asym = float(np.max(np.abs(V - V.T)))
    V = 0.5 * (V + V.T)
    return OrderCoefficient(n, grid, V, asymmetry=asym)


def compute_orders(max_order, grid_size=22, panels=12, points=24,
                   colour_factor=COLOUR_FACTOR, grid=None, rule=None):
    """[G_0, ..., G_{2*max_order}] on a fresh grid and rule."""
    if max_order < 0:
        raise ValueError(f"max_order must be >= 0, got {max_order}")
    if grid is None:
        grid = MomentumGrid(grid_size)
    if rule is None:
        rule = make_rule(panels, points)
    coeffs = [seed(grid)]
    for _ in range(max_order):
        coeffs.append(step(coeffs, rule, colour_factor=colour_factor))
    return coeffs


def diagonal(coef, p):
    """Diagonal value G_{2n}(p, p) by offset extrapolation.

    The grid interpolant is smooth through the diagonal, but the
    diagonal entries themselves were filled by interpolation, so an
    independent extrapolation from symmetric off-diagonal evaluations
    (p+delta, p-delta), Neville in delta^2, is used; for p too close to
    0 the offsets are one-sided in the second argument instead.
    """
    p = float(p)
    if p < 0.0:
        raise ValueError(f"momentum must be nonnegative, got {p}")
    h = 1e-2 * (1.0 + p)
    offsets = [h, h / 2.0, h / 4.0, h / 8.0]
    if p >= h:
        xs = [d * d for d in offsets]
        ys = [float(coef(p + d, p - d)) for d in offsets]
    else:
        xs = offsets
        ys = [float(coef(p, p + d)) for d in offsets]
    # Neville to 0
    n = len(xs)
    for level in range(1, n):
        for i in range(n - level):
            ys[i] = (ys[i] * (xs[i + level] - 0.0) + ys[i + 1] * (0.0 - xs[i])) / (
                xs[i + level] - xs[i])
    return ys[0]


def g00_series(coeffs):
    """Coupling series coefficients c_n = G_{2n}(0,0)."""
    return [diagonal(c, 0.0) for c in coeffs]


def g00_series_with_errors(max_order, grid_size=22, panels=12, points=24):
    """(coefficients, error estimates) from doubling probes.

    The estimate for each coefficient is 1.5 times the sum of the
    changes under doubling the grid size and doubling the quadrature
    points separately, plus a floating-point floor.  The factor 1.5
    covers the cross effect of changing both at once.
    """
    base = compute_orders(max_order, grid_size, panels, points)
    fine_rule = compute_orders(max_order, grid_size, panels, 2 * points)
    fine_grid = compute_orders(max_order, 2 * grid_size, panels, points)
    c0 = g00_series(base)
    c1 = g00_series(fine_rule)
    c2 = g00_series(fine_grid)
    errs = [1.5 * (abs(a - b) + abs(a - c)) + 1e-12 * (1.0 + abs(a))
            for a, b, c in zip(c0, c1, c2)]
    return c0, errs


def eval_series(coeffs, lam, p1, p2):
    """Truncated series sum_{n} lambda^{2n} G_{2n}(p1,p2)."""
    lam2 = lam * lam
    total = 0.0
    w = 1.0
    for c in coeffs:
        total += w * float(c(p1, p2))
        w *= lam2
    return total


def closed_equation_residual(coeffs, lam, p1, p2, rule):
    """Residual of the closed integral equation for the truncated series.

    For a series truncated at order n the residual should scale like
    lambda^{2n+2}: everything up to lambda^{2n} cancels exactly when the
    same quadrature rule is used for the recursion and the residual.
    """
    p1 = float(p1)
    p2 = float(p2)
    if p1 == p2:
        raise ValueError("residual is formulated off the diagonal")
    lam2 = lam * lam
    q = rule.q_nodes
    wq = rule.q_weights
    grid = coeffs[0].grid
    s = 1.0 + p1 + p2
    d = p1 - p2

    def G(a, b):
        return eval_series(coeffs, lam, a, b)

    Gv = G(p1, p2)
    # int dq (G(q,p2) - G(p1,q))
    Mq2 = sum((lam2 ** c.order) * c.interp(q, np.full_like(q, p2))
              for c in coeffs)
    M1q = sum((lam2 ** c.order) * c.interp(np.full_like(q, p1), q)
              for c in coeffs)
    i0 = float(wq @ (Mq2 - M1q))

    def sub_integral(pa, pb):
        # int dq (G(pa,q) - G(pa,pb))/(q - pb), patched near q = pb
        vals = sum((lam2 ** c.order) * c.interp(np.full_like(q, pa), q)
                   for c in coeffs)
        base = G(pa, pb)
        thr = _PATCH_THRESHOLD * (1.0 + pb)
        out = 0.0
        for k in range(q.size):
            if abs(q[k] - pb) > thr:
                out += wq[k] * (vals[k] - base) / (q[k] - pb)
            else:
                h = _STENCIL_SCALE * (1.0 + pb)
                if pb >= 2 * h:
                    xs = [pb - 2*h, pb - h, pb + h, pb + 2*h]
                else:
                    xs = [pb + h, pb + 2*h, pb + 3*h, pb + 4*h]
                nodes = [pb] + xs
                fvals = [np.array([base])] + [np.array([G(pa, x)]) for x in xs]
                out += wq[k] * float(_dd_quotient_rows(nodes, fvals, q[k])[0])
        return out

    rhs = (1.0 / s) + (lam2 / (s * d)) * (
        COLOUR_FACTOR * Gv * i0
        - sub_integral(p1, p2)
        + sub_integral(p2, p1))
    return Gv - rhs
