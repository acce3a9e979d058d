import math

import mpmath
import numpy as np
import pytest

from colour3 import closedforms as cf
from colour3 import polylog

# spot values cross-checked by independent high-precision evaluation
G6_REFS = [
    ((1.3, 0.4), 0.3232196494983),
    ((1.0, 0.25), 0.8148846060926),
    ((2.0, 0.5), 0.0971185379171),
]
GP6_REFS = [
    (0.3, 3.888356365451),
    (0.7, 0.499935486610),
    (1.0, 0.154908596588),
    (2.0, 0.009589696371),
    (5.0, 0.000107241161),
]


def test_g0():
    assert cf.g0(0.0, 0.0) == 1.0
    assert abs(cf.g0(1.0, 2.0) - 0.25) < 1e-15


def test_g2_values():
    # g2(1,0) = 2 log 2 / 4
    assert abs(cf.g2(1.0, 0.0) - 0.5 * math.log(2.0)) < 1e-14
    assert abs(cf.g2(0.0, 0.0) - 2.0) < 1e-14
    assert abs(cf.g2_diag(1.0) - cf.g2(1.0, 1.0)) < 1e-13


def test_symmetry():
    rng = np.random.default_rng(11)
    for _ in range(20):
        a, b = rng.uniform(0.0, 8.0, 2)
        assert cf.g2(a, b) == cf.g2(b, a)
        assert cf.g4(a, b) == cf.g4(b, a)
        assert cf.g6(a, b) == cf.g6(b, a)


def test_g4_against_quadrature_free_reference():
    # independent high-precision evaluation of the same closed form
    with mpmath.workdps(40):
        ctx = cf._MPCtx(40)
        for a, b in [(1.0, 0.3), (2.5, 0.1), (4.0, 3.9)]:
            ref = float(cf._g4_raw(mpmath.mpf(a), mpmath.mpf(b), ctx))
            assert abs(cf.g4(a, b) - ref) < 1e-12 * (1.0 + abs(ref))


def test_g4_diagonal_continuity():
    for p in (0.0, 0.5, 2.0):
        v = cf.g4(p, p)
        v_off = cf.g4(p + 1e-7, p)
        assert abs(v - v_off) < 1e-5 * (1.0 + abs(v))


def test_g6_reference_values():
    for (a, b), ref in G6_REFS:
        assert abs(cf.g6(a, b) - ref) < 1e-10


def test_g6_small_momentum_paths():
    # near-zero second argument goes through the extrapolated branch
    v = cf.g6(1.0, 0.0)
    v_near = cf.g6(1.0, 1e-10)
    assert math.isfinite(v)
    assert abs(v - v_near) < 1e-6 * (1.0 + abs(v))


def test_gp6_reference_values():
    for p, ref in GP6_REFS:
        assert abs(cf.gp6_diag(p) - ref) < 1e-9


def test_gp6_matches_g6_diagonal():
    for p in (0.4, 1.0, 3.0):
        assert abs(cf.gp6_diag(p) - cf.g6(p, p)) < 1e-12


def test_gp6_zero_momentum_limit():
    c3 = cf.zero_momentum_coefficients()[3]
    assert cf.gp6_diag(0.0) == c3
    assert abs(cf.gp6_diag(1e-7) - c3) < 1e-4
    assert abs(cf.gp6_diag(1e-6) - c3) < 1e-3


def test_zero_momentum_coefficients():
    c0, c1, c2, c3 = cf.zero_momentum_coefficients()
    assert c0 == 1.0
    assert c1 == 2.0
    assert abs(c2 - 2.0 * (math.pi ** 2 - 6.0)) < 1e-14
    expect = (math.pi ** 2 * (514.0 / 3.0 - 224.0 * math.log(2.0))
              + 120.0 * polylog.ZETA3 - 266.0)
    assert abs(c3 - expect) < 1e-12
    assert abs(cf.g2(0.0, 0.0) - c1) < 1e-13
    assert abs(cf.g4(0.0, 0.0) - c2) < 1e-9
    assert abs(cf.g6(0.0, 0.0) - c3) < 1e-9


def test_f_coeff_pole_reporting():
    assert math.isfinite(cf.f_coeff(2, 1.0, 0.5))
    with pytest.raises(ZeroDivisionError):
        cf.f_coeff(1, 1.0, 1.0)


def test_validation():
    with pytest.raises(ValueError):
        cf.g2(-1.0, 0.0)
    with pytest.raises(ValueError):
        cf.g4(math.inf, 0.0)
    with pytest.raises(ValueError):
        cf.gp6_diag(-0.5)


def test_g6_terms_sum_matches():
    terms = cf.g6_terms(2.0, 0.7)
    assert abs(sum(terms.values()) - cf.g6(2.0, 0.7)) < 1e-10
