import math

import numpy as np
import pytest

from colour3 import closedforms as cf
from colour3 import recursion
from colour3.cheb import MomentumGrid
from colour3.quad import make_rule


@pytest.fixture(scope="module")
def coeffs():
    return recursion.compute_orders(3)


def test_seed_exact():
    g = MomentumGrid(10)
    c0 = recursion.seed(g)
    rng = np.random.default_rng(1)
    for _ in range(10):
        a, b = rng.uniform(0.0, 20.0, 2)
        assert abs(c0(a, b) - 1.0 / (1.0 + a + b)) < 1e-14


def test_order1_matches_closed(coeffs):
    rng = np.random.default_rng(5)
    for _ in range(30):
        a, b = rng.uniform(0.0, 5.0, 2)
        assert abs(float(coeffs[1](a, b)) - cf.g2(a, b)) < 1e-8


def test_order2_matches_closed(coeffs):
    rng = np.random.default_rng(6)
    for _ in range(30):
        a, b = rng.uniform(0.0, 5.0, 2)
        assert abs(float(coeffs[2](a, b)) - cf.g4(a, b)) < 1e-6


def test_order3_matches_closed(coeffs):
    rng = np.random.default_rng(8)
    for _ in range(30):
        a, b = rng.uniform(0.0, 5.0, 2)
        assert abs(float(coeffs[3](a, b)) - cf.g6(a, b)) < 5e-5


def test_diagonal_extrapolation(coeffs):
    for p in (0.0, 0.5, 1.0, 2.0, 5.0):
        assert abs(recursion.diagonal(coeffs[1], p) - cf.g2_diag(p)) < 1e-8
        assert abs(recursion.diagonal(coeffs[3], p) - cf.gp6_diag(p)) < 1e-5


def test_symmetry_preserved(coeffs):
    for c in coeffs:
        assert np.max(np.abs(c.values - c.values.T)) == 0.0
        assert c.asymmetry < 1e-4


def test_series_values():
    c = recursion.g00_series(recursion.compute_orders(2))
    ref = cf.zero_momentum_coefficients()
    assert abs(c[0] - ref[0]) < 1e-8
    assert abs(c[1] - ref[1]) < 1e-6
    assert abs(c[2] - ref[2]) < 1e-4


def test_series_error_estimates_cover_truth():
    c, errs = recursion.g00_series_with_errors(2)
    ref = cf.zero_momentum_coefficients()
    for n in range(3):
        assert abs(c[n] - ref[n]) < 10.0 * errs[n] + 1e-9


def test_colour_factor_sensitivity():
    wrong = recursion.compute_orders(1, colour_factor=1.0)
    assert abs(float(wrong[1](1.0, 0.0)) - cf.g2(1.0, 0.0)) > 1e-3


def test_eval_series_consistency(coeffs):
    lam = 0.1
    v = recursion.eval_series(coeffs, lam, 1.0, 0.3)
    manual = sum(lam ** (2 * n) * float(coeffs[n](1.0, 0.3)) for n in range(4))
    assert abs(v - manual) < 1e-14


def test_residual_scaling(coeffs):
    rule = make_rule(12, 24)
    for n in (1, 2):
        r1 = abs(recursion.closed_equation_residual(
            coeffs[:n + 1], 0.05, 1.3, 0.4, rule))
        r2 = abs(recursion.closed_equation_residual(
            coeffs[:n + 1], 0.1, 1.3, 0.4, rule))
        slope = math.log(r2 / r1) / math.log(2.0)
        assert abs(slope - (2 * n + 2)) < 0.2


def test_validation():
    with pytest.raises(ValueError):
        recursion.compute_orders(-1)
    with pytest.raises(ValueError):
        recursion.diagonal(recursion.seed(MomentumGrid(8)), -1.0)
