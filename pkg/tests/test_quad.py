import math

import numpy as np
import pytest

from colour3 import quad


RULE = quad.make_rule(12, 24)


def test_known_integrals():
    assert abs(quad.integrate(RULE, lambda q: 1.0 / (1.0 + q) ** 2) - 1.0) < 1e-13
    assert abs(quad.integrate(RULE, lambda q: np.log1p(q) / (1.0 + q) ** 3) - 0.25) < 1e-13
    # int 1/((1+q)(2+q)) = log 2
    val = quad.integrate(RULE, lambda q: 1.0 / ((1.0 + q) * (2.0 + q)))
    assert abs(val - math.log(2.0)) < 1e-13


def test_scalar_callable_fallback():
    val = quad.integrate(RULE, lambda q: float(1.0 / (1.0 + q) ** 2))
    assert abs(val - 1.0) < 1e-13


def test_integrate_with_error():
    # the mapped integrand has a half-power endpoint factor, so the
    # rule converges but not to full machine precision
    val, err = quad.integrate_with_error(RULE, lambda q: 1.0 / (1.0 + q) ** 1.5)
    assert abs(val - 2.0) < 1e-9
    assert err < 1e-9
    # an under-resolved rule reports a visible estimate
    coarse = quad.make_rule(2, 2)
    _, err2 = quad.integrate_with_error(coarse, lambda q: np.log1p(q) / (1.0 + q) ** 3)
    assert err2 > 1e-6


def test_nonfinite_integrand_raises():
    with pytest.raises(ArithmeticError):
        quad.integrate(RULE, lambda q: np.where(q > 1.0, np.inf, 1.0))


def test_make_rule_validation():
    with pytest.raises(ValueError):
        quad.make_rule(0, 8)
    with pytest.raises(ValueError):
        quad.make_rule(4, 1)
    with pytest.raises(ValueError):
        quad.make_rule(4.0, 8)


def test_weights_positive_and_nodes_increasing():
    assert np.all(RULE.q_weights > 0)
    assert np.all(np.diff(RULE.v_nodes) > 0)
    assert np.all(np.diff(RULE.q_nodes) > 0)
    assert len(RULE) == 12 * 24


def test_eval_subtracted_matches_direct_away_from_pole():
    g = lambda q: 1.0 / (1.0 + q) ** 2
    q0 = 1.0
    for q in (0.2, 3.0, 10.0):
        direct = (g(q) - g(q0)) / (q - q0)
        assert abs(quad.eval_subtracted(g, q0, q) - direct) < 1e-14


def test_eval_subtracted_finite_through_pole():
    g = lambda q: np.log1p(q) / (1.0 + q)
    q0 = 2.0
    # derivative of g at q0
    exact = (1.0 - math.log1p(q0)) / (1.0 + q0) ** 2
    near = quad.eval_subtracted(g, q0, q0 + 1e-9)
    at = quad.eval_subtracted(g, q0, q0)
    assert abs(near - exact) < 1e-8
    assert abs(at - exact) < 1e-8


def test_eval_subtracted_branch_continuity():
    g = lambda q: 1.0 / (2.0 + q) ** 2
    q0 = 1.5
    thr = 1e-4 * (1.0 + q0)
    below = quad.eval_subtracted(g, q0, q0 + 0.99 * thr)
    above = quad.eval_subtracted(g, q0, q0 + 1.01 * thr)
    assert abs(below - above) < 1e-7
