from fractions import Fraction

import pytest

from alcove.catdata import (a2_normalize, a2_orbit, dim_factors, g2_convexity_violations,
                            in_root_lattice, qdim, qdim_numerator, simple_current_rotation,
                            so5_convexity_violations, twist_arg, twist_arg_from_form,
                            twist_is_third_root, twist_is_trivial)
from alcove.lie import AlgebraId, dual_weight, enumerate_alcove

ALGS = list(AlgebraId)


def test_dim_factor_closed_forms():
    assert dim_factors("sl2", (5,)) == (6,)
    for l in range(8):
        for m in range(8):
            assert sorted(dim_factors("sl3", (l, m))) == sorted([l + 1, m + 1, l + m + 2])
            assert sorted(dim_factors("so5", (l, m))) == sorted(
                [2 * l + 2, m + 1, 2 * l + m + 3, 2 * (l + m + 2)])
            assert sorted(dim_factors("g2", (l, m))) == sorted(
                [l + 1, 3 * (m + 1), l + 3 * m + 4, 2 * l + 3 * m + 5,
                 3 * (l + m + 2), 3 * (l + 2 * m + 3)])


@pytest.mark.parametrize("alg", ALGS)
def test_twist_closed_form_matches_form(alg):
    for k in range(1, 21):
        for w in enumerate_alcove(alg, k):
            assert twist_arg(alg, k, w) == twist_arg_from_form(alg, k, w)


@pytest.mark.parametrize("alg", ALGS)
def test_twist_dual_invariant(alg):
    for k in range(1, 16):
        for w in enumerate_alcove(alg, k):
            diff = twist_arg(alg, k, w) - twist_arg(alg, k, dual_weight(alg, k, w))
            assert diff.denominator == 1


def test_twist_examples():
    assert twist_arg("sl2", 28, (10,)) == 1
    assert twist_is_trivial("sl2", 28, (28,))
    assert not twist_is_trivial("sl2", 28, (2,))
    assert twist_arg("sl3", 5, (1, 1)) == Fraction(3, 8)
    assert not twist_is_third_root("sl3", 5, (1, 1))
    assert twist_is_trivial("sl3", 5, (2, 2)) and twist_is_third_root("sl3", 5, (2, 2))
    assert twist_is_third_root("sl3", 1, (1, 0)) and not twist_is_trivial("sl3", 1, (1, 0))
    with pytest.raises(ValueError):
        twist_arg("g2", 3, (0, 2))


def test_quantum_dimension_positive():
    for alg in ALGS:
        for k in (1, 2, 5, 13, 27, 40):
            for w in enumerate_alcove(alg, k):
                assert qdim(alg, k, w).value >= 1 - 1e-9


def test_qdim_numerator_vs_qdim():
    q = qdim("g2", 9, (2, 1))
    num = qdim_numerator("g2", 9, (2, 1))
    one = qdim_numerator("g2", 9, (0, 0))
    assert q.value == pytest.approx(num.value / one.value)
    ext = qdim("g2", 9, (2, 1), "extended")
    assert abs(float(ext.value) - q.value) <= q.margin


def test_simple_currents_have_dimension_one():
    assert qdim("sl3", 7, (0, 7)).value == pytest.approx(1)
    assert qdim("so5", 7, (7, 0)).value == pytest.approx(1)
    assert qdim("sl2", 7, (7,)).value == pytest.approx(1)


@pytest.mark.parametrize("alg, w, expected", [
    ("sl3", (1, 1), True), ("sl3", (1, 0), False), ("sl3", (4, 1), True), ("sl3", (3, 0), True),
    ("so5", (3, 1), False), ("so5", (3, 2), True), ("so5", (0, 2), True),
    ("g2", (1, 0), True), ("g2", (3, 5), True),
    ("sl2", (3,), False), ("sl2", (4,), True),
])
def test_root_lattice(alg, w, expected):
    assert in_root_lattice(alg, w) is expected


def test_root_lattice_congruences():
    for k in range(1, 12):
        for w in enumerate_alcove("sl3", k):
            assert in_root_lattice("sl3", w) == ((w[0] - w[1]) % 3 == 0)
        for w in enumerate_alcove("so5", k):
            assert in_root_lattice("so5", w) == (w[1] % 2 == 0)
        assert all(in_root_lattice("g2", w) for w in enumerate_alcove("g2", k))


def test_rotation_is_order_three():
    k = 9
    for w in enumerate_alcove("sl3", k):
        r = simple_current_rotation(k, w)
        assert r != w or w == (3, 3)
        assert simple_current_rotation(k, simple_current_rotation(k, r)) == w
    assert simple_current_rotation(k, (0, 0)) == (0, k)


def test_a2_normalize_example():
    assert a2_orbit(12, (3, 4)) == [(3, 4), (3, 5), (4, 3), (4, 5), (5, 3), (5, 4)]
    rep = a2_normalize(12, (3, 4))
    assert rep == (4, 3)
    assert rep[1] <= rep[0] <= 6
    assert a2_normalize(12, rep) == rep
    assert a2_normalize(12, (0, 0)) == (0, 0)


def test_a2_normalize_orbit_invariant():
    for k in range(1, 14):
        for w in enumerate_alcove("sl3", k):
            rep = a2_normalize(k, w)
            assert rep[1] <= rep[0] and 2 * rep[0] <= k
            assert a2_normalize(k, rep) == rep
            assert a2_normalize(k, simple_current_rotation(k, w)) == rep
            assert a2_normalize(k, (w[1], w[0])) == rep


def test_so5_convexity_small():
    assert all(so5_convexity_violations(k) == [] for k in range(1, 31))


def test_g2_convexity_violations_are_endpoint_only():
    # the minimum over s + 3t/2 = x is attained at (0, 2x/3) rather than (x, 0)
    assert g2_convexity_violations(6) == []
    assert g2_convexity_violations(7) == [((3, 0), (0, 2))]
    for k in (12, 25):
        for small, w in g2_convexity_violations(k):
            assert w == (0, 2 * small[0] // 3)
