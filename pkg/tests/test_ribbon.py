import math

import numpy as np
import pytest

from colour3 import closedforms as cf
from colour3 import ribbon


@pytest.fixture(scope="module")
def order1():
    return ribbon.enumerate_2pt(1)


@pytest.fixture(scope="module")
def order2():
    return ribbon.enumerate_2pt(2)


def test_order0_bare_graph():
    classes = ribbon.enumerate_2pt(0)
    assert len(classes) == 1
    assert classes[0].s == 1
    g = classes[0].representative
    assert abs(ribbon.amplitude(g, [1.0, 2.0]) - 0.25) < 1e-14


def test_order1_single_class(order1):
    assert len(order1) == 1
    assert order1[0].s == 2


def test_order2_multiplicities(order2):
    assert sorted(c.s for c in order2) == [2, 4, 4, 4]
    assert sum(c.s for c in order2) == 14


def test_resum_order1(order1):
    rng = np.random.default_rng(2)
    for _ in range(10):
        a, b = rng.uniform(0.0, 5.0, 2)
        assert abs(ribbon.resum(order1, [a, b]) - cf.g2(a, b)) < 1e-12


def test_resum_order2(order2):
    rng = np.random.default_rng(4)
    for _ in range(10):
        a, b = rng.uniform(0.0, 5.0, 2)
        assert abs(ribbon.resum(order2, [a, b]) - cf.g4(a, b)) < 1e-7


def test_order2_closed_amplitudes(order2):
    # each enumerated class matches exactly one of the four closed forms
    p1, p2 = 1.7, 0.6
    matched = set()
    for c in order2:
        amp = ribbon.amplitude(c.representative, [p1, p2])
        errs = {k: abs(ribbon.amplitude_closed(k, p1, p2) - amp)
                for k in (1, 2, 3, 4)}
        k_best = min(errs, key=errs.get)
        assert errs[k_best] < 1e-12
        matched.add(k_best)
    assert matched == {1, 2, 3, 4}


def test_closed_amplitude_spot_value():
    assert abs(ribbon.amplitude_closed(2, 1.0, 0.0) - math.log(2.0) ** 2 / 8.0) < 1e-15


def test_closed_amplitude_diagonal_raises():
    with pytest.raises(ZeroDivisionError):
        ribbon.amplitude_closed(1, 1.0, 1.0)


def test_worked_examples():
    rng = np.random.default_rng(9)
    for k, nlab in [(1, 2), (2, 2), (3, 3)]:
        g = ribbon.example_graph(k)
        for _ in range(10):
            labs = rng.uniform(0.05, 5.0, nlab)
            num = ribbon.amplitude(g, labs)
            assert abs(num - ribbon.example_closed(k, labs)) < 1e-9


def test_example_topologies():
    # example 1 has no internal face, 2 and 3 have one each
    for k, n_ext in [(1, 2), (2, 2), (3, 3)]:
        g = ribbon.example_graph(k)
        assert g.is_connected()
        assert g.is_planar()
        assert len(g.external_faces()) == n_ext
    assert len(ribbon.example_graph(1).faces()) == 2
    assert len(ribbon.example_graph(2).faces()) == 3
    assert len(ribbon.example_graph(3).faces()) == 4


def test_colour_counting_rules(order1):
    g = order1[0].representative
    assert ribbon.count_colourings(g) == 2


def test_amplitude_label_validation(order1):
    g = order1[0].representative
    with pytest.raises(ValueError):
        ribbon.amplitude(g, [1.0, 2.0, 3.0])


def test_amplitude_convergence_guard(order2):
    g = order2[0].representative
    from colour3.quad import make_rule
    with pytest.raises(ArithmeticError):
        ribbon.amplitude(g, [1.0, 0.0], rule=make_rule(1, 2))


def test_enumeration_order_validation():
    with pytest.raises(ValueError):
        ribbon.enumerate_2pt(3)


def test_graph_export_roundtrip(order1):
    d = order1[0].representative.to_dict()
    assert set(d) == {"vertices", "alpha", "faces"}
    g2 = ribbon.RibbonGraph(tuple(tuple(v) for v in d["vertices"]),
                            tuple(d["alpha"]))
    assert [list(f) for f in g2.faces()] == d["faces"]
