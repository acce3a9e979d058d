"""Exact closed forms for the planar 2-point function coefficients.

g0, g2, g4, g6 give the coefficient of lambda^{2n} (n = 0..3) of the
planar 2-point function; gp6_diag is the order-3 coefficient on the
momentum diagonal.  All printed formulas are 0/0 on the diagonal and
several pieces diverge individually as either momentum goes to zero,
with finite sums.  The wrappers therefore route evaluations near those
sets through arbitrary-precision arithmetic (mpmath) at a working
precision chosen from the distance to the singular set; everywhere else
plain double precision is used.

Evaluation is canonicalised to p1 >= p2, which makes the symmetry
g(p1,p2) = g(p2,p1) exact in floating point.
"""

import math

import mpmath

from . import polylog

PI2 = math.pi ** 2


def _validate(p1, p2):
    p1 = float(p1)
    p2 = float(p2)
    if not (math.isfinite(p1) and math.isfinite(p2)):
        raise ValueError(f"momenta must be finite, got ({p1!r}, {p2!r})")
    if p1 < 0.0 or p2 < 0.0:
        raise ValueError(f"momenta must be nonnegative, got ({p1}, {p2})")
    return (p1, p2) if p1 >= p2 else (p2, p1)


class _FloatCtx:
    """Double-precision transcendentals."""
    pi2 = PI2
    zeta3 = polylog.ZETA3
    log2 = math.log(2.0)
    log = staticmethod(math.log)
    log1p = staticmethod(math.log1p)
    li2 = staticmethod(polylog.li2)
    li3 = staticmethod(polylog.li3)

    @staticmethod
    def frac(a, b):
        return a / b


class _MPCtx:
    """mpmath transcendentals at a given working precision."""

    def __init__(self, dps):
        self.dps = dps
        with mpmath.workdps(dps):
            self.pi2 = mpmath.pi ** 2
            self.zeta3 = mpmath.zeta(3)
            self.log2 = mpmath.log(2)

    def log(self, x):
        return mpmath.log(x)

    def log1p(self, x):
        return mpmath.log1p(x)

    def li2(self, x):
        return mpmath.polylog(2, x)

    def li3(self, x):
        return mpmath.polylog(3, x)

    def frac(self, a, b):
        return mpmath.mpf(a) / b


_FLOAT = _FloatCtx()


# ---------------------------------------------------------------------------
# raw formulas, generic over the arithmetic context

def _g0_raw(p1, p2):
    return 1.0 / (1.0 + p1 + p2)


def _log_ratio_quotient(p1, p2, ctx):
    # log((1+p1)/(1+p2)) / (p1-p2), stable through the diagonal
    d = p1 - p2
    if d == 0:
        return 1 / (1 + p2)
    return ctx.log1p(d / (1 + p2)) / d


def _g2_raw(p1, p2, ctx):
    s = 1 + p1 + p2
    return 2 * _log_ratio_quotient(p1, p2, ctx) / s ** 2


def _xlog1p(x, ctx):
    # log(1+x)/x with the x -> 0 limit
    if x == 0:
        return 1 - x  # == 1, keeps mpf type when x is mpf zero
    return ctx.log1p(x) / x


def _g4_raw(p1, p2, ctx):
    s = 1 + p1 + p2
    d = p1 - p2
    L = ctx.log1p(p1) - ctx.log1p(p2)
    pi2_6 = ctx.pi2 / 6
    li2a = ctx.li2(p1 / (1 + p1))
    li2b = ctx.li2(p2 / (1 + p2))
    bracket = (3 * L * L / (s * d)
               + 2 * _xlog1p(p1, ctx) / ((1 + 2 * p1) * (1 + p1))
               - 2 * _xlog1p(p2, ctx) / ((1 + 2 * p2) * (1 + p2))
               - (1 + 2 * p2) * (pi2_6 + 2 * li2a) / ((1 + 2 * p1) ** 2 * s)
               + (1 + 2 * p1) * (pi2_6 + 2 * li2b) / ((1 + 2 * p2) ** 2 * s))
    return 2 * bracket / (s ** 2 * d)


def _f1(p1, p2):
    s = 1 + p1 + p2
    return -8 / (p1 * (1 + p1) ** 2 * (1 + 2 * p1) ** 2 * (p1 - p2) * s ** 2)


def _f2(p1, p2):
    s = 1 + p1 + p2
    d = p1 - p2
    num = 4 * (d ** 3 + s * (7 * s ** 2 - 3 * (1 + 2 * p2) * d))
    return num / ((1 + 2 * p1) ** 3 * d * s ** 4 * (1 + 2 * p2) ** 2)


def _f3(p1, p2):
    s = 1 + p1 + p2
    d = p1 - p2
    brace = (s * (2 * d * (1 + 10 * p1 * (1 + p1))
                  + 3 * p1 * (1 + p1) * (1 + 2 * p1))
             + 2 * p1 * (1 + p1) * (1 + 2 * p1) ** 2)
    return 6 * brace / (p1 ** 2 * (1 + p1) ** 2 * (1 + 2 * p1) ** 3 * d ** 2 * s ** 3)


def _f4(p1, p2):
    s = 1 + p1 + p2
    d = p1 - p2
    brace = (s * (2 * (1 + p2) + p1 * (11 + 43 * p1 + 38 * p1 ** 2
                                       - 6 * (3 + 4 * p1) * p2))
             - 2 * (1 + p1) * (1 + 2 * p1) ** 3)
    return -4 * brace / (p1 * (1 + p1) ** 2 * (1 + 2 * p1) ** 3 * d ** 2 * s ** 3)


def _f5(p1, p2):
    s = 1 + p1 + p2
    d = p1 - p2
    return 12 * (2 * d ** 2 + (1 + 2 * p2) * s) / ((1 + 2 * p1) ** 2 * d ** 3 * s ** 4)


def _f6(p1, p2):
    s = 1 + p1 + p2
    d = p1 - p2
    brace = s * (10 * d ** 2 + (1 + 3 * p1 - p2) ** 2) - d ** 3
    return -24 * brace / ((1 + 2 * p1) ** 4 * d ** 3 * s ** 3)


def _f7(p1, p2):
    s = 1 + p1 + p2
    return -12 * (5 + 6 * p1 + 4 * p2) / ((1 + 2 * p1) ** 4 * (p1 - p2) * s ** 3)


def _f8(p1, p2):
    return 20 / ((1 + p1 + p2) ** 4 * (p1 - p2) ** 3)


def _f9(p1, p2):
    s = 1 + p1 + p2
    num = 2 * p1 ** 2 - 2 * p1 * p2 + p1 + 2 * p2 ** 2 + p2
    return -24 * num / (p1 * (1 + p1) * (1 + 2 * p1) * (p1 - p2) ** 2
                        * p2 * (1 + p2) * (1 + 2 * p2) * s ** 2)


def _f10(p1, p2):
    s = 1 + p1 + p2
    inner = (s * (48 * p1 ** 3
                  + (-48 * p1 ** 2 - 24 * p1 + 72) * p2 ** 2
                  + (-40 * p1 ** 2 - 12 * p1 + 56) * p2
                  + 88 * p1 ** 2 + 56 * p1 + 32 * p2 ** 3 + 24)
             - (2 * p1 + 1) ** 2 * (4 * p1 * (p1 + 1) - 1))
    big = (p1 * p2 * inner
           + 2 * (2 * p1 + 1) ** 2 * (2 * p2 + 1) ** 2 * s ** 3
           + p1 * (p1 + 1) * (2 * p1 + 1) ** 2
           + p2 * (p2 + 1) * (2 * p2 + 1) ** 2)
    return 4 * big / (3 * p1 * (1 + p1) * (1 + 2 * p1) ** 3
                      * p2 * (1 + p2) * (1 + 2 * p2) ** 3 * s ** 3)


def _f11(p1, p2):
    s = 1 + p1 + p2
    return -32 * (9 * (p1 - p2) ** 2 + 7 * s ** 2) / (
        (1 + 2 * p1) ** 4 * (1 + 2 * p2) ** 4 * s)


def _f12(p1, p2):
    s = 1 + p1 + p2
    return 24 * ((p1 - p2) ** 2 + 5 * s ** 2) / (
        (1 + 2 * p1) ** 3 * (1 + 2 * p2) ** 3 * s ** 3)


_F_FUNCS = {1: _f1, 2: _f2, 3: _f3, 4: _f4, 5: _f5, 6: _f6, 7: _f7,
            8: _f8, 9: _f9, 10: _f10, 11: _f11, 12: _f12}


def _g6_symmetrized_half(p1, p2, ctx):
    # the seven terms that appear once as written and once with p1 <-> p2
    L1 = ctx.log1p(p1)
    Lr = ctx.log1p(p1) - ctx.log1p(p2)
    pi2 = ctx.pi2
    x1 = p1 / (1 + p1)
    li2_1 = ctx.li2(x1)
    li3m = ctx.li3(-p1)
    li3x = ctx.li3(x1)
    return (L1 * _f1(p1, p2)
            + pi2 * L1 * _f2(p1, p2)
            + L1 * L1 * _f3(p1, p2)
            + (li2_1 + pi2 / 6) * _f4(p1, p2)
            + li2_1 * Lr * _f5(p1, p2)
            + (li3m + li3x + li2_1 * L1 + L1 ** 3 / 6 - pi2 * L1 / 6) * _f6(p1, p2)
            + (li3x + pi2 * L1 / 3) * _f7(p1, p2))


def _g6_raw(p1, p2, ctx):
    Lr = ctx.log1p(p1) - ctx.log1p(p2)
    shared = (Lr ** 3 * _f8(p1, p2)
              + ctx.log1p(p1) * ctx.log1p(p2) * _f9(p1, p2)
              + ctx.pi2 * _f10(p1, p2)
              + ctx.pi2 * ctx.log2 * _f11(p1, p2)
              + ctx.zeta3 * _f12(p1, p2))
    return (_g6_symmetrized_half(p1, p2, ctx)
            + _g6_symmetrized_half(p2, p1, ctx)
            + shared)


# ---------------------------------------------------------------------------
# public operations

def g0(p1, p2):
    """Order-0 coefficient, 1/(1+p1+p2)."""
    p1, p2 = _validate(p1, p2)
    return _g0_raw(p1, p2)


def g2(p1, p2):
    """Order-1 (lambda^2) coefficient."""
    p1, p2 = _validate(p1, p2)
    return _g2_raw(p1, p2, _FLOAT)


def g2_diag(p):
    """g2 on the diagonal, 2/((1+p)(1+2p)^2)."""
    return 2.0 / ((1.0 + p) * (1.0 + 2.0 * p) ** 2)


def _rel_gap(p1, p2):
    return abs(p1 - p2) / (1.0 + p1 + p2)


def g4(p1, p2):
    """Order-2 (lambda^4) coefficient."""
    p1, p2 = _validate(p1, p2)
    rel = _rel_gap(p1, p2)
    if rel > 1e-4:
        return _g4_raw(p1, p2, _FLOAT)
    if rel > 1e-12:
        with mpmath.workdps(40):
            return float(_g4_raw(mpmath.mpf(p1), mpmath.mpf(p2), _MPCtx(40)))
    # on (or numerically on) the diagonal: offset evaluation in high
    # precision (no printed closed form for the g4 diagonal limit)
    m = 0.5 * (p1 + p2)
    with mpmath.workdps(60):
        d = mpmath.mpf("1e-12") * (1 + 2 * m)
        ctx = _MPCtx(60)
        if m > float(d):
            return float(_g4_raw(mpmath.mpf(m) + d, mpmath.mpf(m) - d, ctx))
        return float(_g4_raw(mpmath.mpf(m) + 2 * d, mpmath.mpf(m) + d, ctx))


def g6(p1, p2):
    """Order-3 (lambda^6) coefficient, assembled from f1..f12."""
    p1, p2 = _validate(p1, p2)
    rel = _rel_gap(p1, p2)
    if rel < 1e-8:
        return gp6_diag(0.5 * (p1 + p2))
    if rel < 1e-2 or min(p1, p2) < 1e-3:
        dps = 70
        with mpmath.workdps(dps):
            ctx = _MPCtx(dps)
            if min(p1, p2) < 1e-8:
                # f1..f10 have individually divergent 1/p pieces; evaluate
                # just off zero and extrapolate the finite combination
                lo = min(p1, p2)
                hi = max(p1, p2)
                xs = [mpmath.mpf("1e-8") * k for k in (1, 2, 3)]
                ys = [_g6_raw(mpmath.mpf(hi), x, ctx) for x in xs]
                return float(_neville(xs, ys, mpmath.mpf(lo)))
            return float(_g6_raw(mpmath.mpf(p1), mpmath.mpf(p2), ctx))
    return _g6_raw(p1, p2, _FLOAT)


def gp6_diag(p):
    """Order-3 coefficient on the diagonal p1 = p2 = p.

    Computed as the diagonal limit of the off-diagonal closed form: the
    singularity at p1 = p2 is removable, and symmetric-offset Richardson
    extrapolation in arbitrary precision recovers the limit to well
    below double-precision roundoff.  The extrapolation error behaves
    like the square of the relative offset (1e-8), so the returned
    double carries full accuracy.
    """
    p = float(p)
    if not math.isfinite(p) or p < 0.0:
        raise ValueError(f"momentum must be finite and nonnegative, got {p!r}")
    if p == 0.0:
        return zero_momentum_coefficients()[3]
    if p < 1e-6:
        # the diagonal value is analytic at p = 0; bridge the region
        # where offset evaluation would need excessive precision
        xs = [1e-6 * k for k in (1, 2, 3, 4)]
        return float(_neville(xs, [gp6_diag(x) for x in xs], p))
    dps = 70 + int(4 * max(0.0, -math.log10(p)))
    with mpmath.workdps(dps):
        ctx = _MPCtx(dps)
        pm = mpmath.mpf(p)
        d0 = mpmath.mpf("1e-8") * pm
        xs, ys = [], []
        for k in (1, 2, 3):
            d = d0 / 2 ** k
            xs.append(d * d)
            ys.append(_g6_raw(pm + d, pm - d, ctx))
        return float(_neville(xs, ys, mpmath.mpf(0)))


def f_coeff(k, p1, p2):
    """Coefficient function f_k, exactly as printed (poles included)."""
    if k not in _F_FUNCS:
        raise ValueError(f"k must be in 1..12, got {k!r}")
    p1 = float(p1)
    p2 = float(p2)
    if not (math.isfinite(p1) and math.isfinite(p2)) or p1 < 0 or p2 < 0:
        raise ValueError(f"momenta must be finite and nonnegative, got ({p1!r}, {p2!r})")
    try:
        with _raise_on_div0():
            return _F_FUNCS[k](p1, p2)
    except ZeroDivisionError:
        raise ZeroDivisionError(
            f"f_{k} evaluated on one of its poles at ({p1}, {p2}); "
            "use the assembled g6 for the finite combination") from None


class _raise_on_div0:
    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        return False


def g6_terms(p1, p2):
    """Term-by-term breakdown of g6 (double precision, off-diagonal).

    Returns a dict of the individually divergence-prone pieces; useful
    for debugging transcription questions.
    """
    p1, p2 = _validate(p1, p2)
    ctx = _FLOAT
    Lr = ctx.log1p(p1) - ctx.log1p(p2)
    out = {
        "half(p1,p2)": _g6_symmetrized_half(p1, p2, ctx),
        "half(p2,p1)": _g6_symmetrized_half(p2, p1, ctx),
        "log_ratio^3*f8": Lr ** 3 * _f8(p1, p2),
        "log*log*f9": ctx.log1p(p1) * ctx.log1p(p2) * _f9(p1, p2),
        "pi2*f10": ctx.pi2 * _f10(p1, p2),
        "pi2*log2*f11": ctx.pi2 * ctx.log2 * _f11(p1, p2),
        "zeta3*f12": ctx.zeta3 * _f12(p1, p2),
    }
    return out


def zero_momentum_coefficients():
    """[g0, g2, g4, g6] at p1 = p2 = 0, in closed form."""
    c3 = PI2 * (514.0 / 3.0 - 224.0 * math.log(2.0)) + 120.0 * polylog.ZETA3 - 266.0
    return [1.0, 2.0, 2.0 * (PI2 - 6.0), c3]


def _neville(xs, ys, x):
    ys = list(ys)
    n = len(xs)
    for level in range(1, n):
        for i in range(n - level):
            ys[i] = (ys[i] * (xs[i + level] - x) + ys[i + 1] * (x - xs[i])) / (
                xs[i + level] - xs[i])
    return ys[0]
