import math

import mpmath
import pytest
from hypothesis import given, strategies as st

from alcove.qnum import (QContext, QValue, check_lower_bound, check_quantum_bound,
                         check_quantum_triangle, context_for, decide_leq, lower_bound_counterexamples,
                         qint, qint_table, qprod, triangle_counterexamples,
                         upper_bound_counterexamples)


def test_context_validation():
    with pytest.raises(ValueError):
        QContext(2)
    with pytest.raises(ValueError):
        QContext(10, "quad")
    assert context_for("so5", 12).epsilon == 30


def test_exact_special_values():
    ctx = QContext(17)
    assert qint(ctx, 0).value == 0.0
    assert qint(ctx, 17).value == 0.0
    assert qint(ctx, 1).value == 1.0
    assert qint(ctx, 35).value == 1.0
    assert qint(ctx, 34).value == 0.0
    with pytest.raises(ValueError):
        qint(ctx, -1)


@pytest.mark.parametrize("eps", [3, 7, 30, 71, 159])
def test_margin_covers_error(eps):
    mp = mpmath.MPContext()
    mp.dps = 60
    ctx = QContext(eps)
    den = mp.sin(mp.pi / eps)
    for n in range(1, 2 * eps + 1):
        if n % eps == 0:
            continue
        q = qint(ctx, n)
        exact = mp.sin(n * mp.pi / eps) / den
        assert abs(mp.mpf(q.value) - exact) <= q.margin, n


def test_extended_precision_agrees():
    for eps in (9, 40, 101):
        lo, hi = QContext(eps), QContext(eps, "extended")
        for n in range(2 * eps):
            a, b = qint(lo, n), qint(hi, n)
            assert abs(a.value - float(b.value)) <= a.margin


def test_symmetry_and_monotonicity():
    for eps in range(3, 80):
        ctx = QContext(eps)
        vals = [qint(ctx, n).value for n in range(eps + 1)]
        for n in range(eps + 1):
            assert vals[eps - n] == pytest.approx(vals[n], abs=1e-9)
        half = [vals[n] for n in range(1, eps // 2 + 1)]
        assert all(a < b for a, b in zip(half, half[1:]))


def test_table_matches_scalar():
    vals, marg = qint_table(47, 94)
    ctx = QContext(47)
    for n in range(95):
        q = qint(ctx, n)
        assert abs(vals[n] - q.value) <= marg[n] + q.margin


def test_qvalue_arithmetic_tracks_margin():
    a = QValue(2.0, 1e-12)
    b = QValue(3.0, 2e-12)
    s = a + b
    assert s.value == 5.0 and s.margin >= 3e-12
    p = a * b
    assert p.value == 6.0 and p.margin >= 2.0 * 2e-12 + 3.0 * 1e-12
    assert (a - b).value == -1.0
    assert a.separation(b) == -1 and b.separation(a) == 1
    assert a.separation(QValue(2.0 + 1e-13, 0.0)) is None


def test_qprod():
    ctx = QContext(30)
    p = qprod(ctx, [3, 5])
    assert p.value == pytest.approx(qint(ctx, 3).value * qint(ctx, 5).value)
    assert qprod(ctx, []).value == 1.0


def test_tie_resolved_as_equality():
    # at eps = 30, [3] + [5] = [9] exactly
    ctx = QContext(30)

    def build(c):
        return qint(c, 3) + qint(c, 5), qint(c, 9)

    assert decide_leq(ctx, build)
    assert not decide_leq(ctx, build, strict=True)


def test_lemma_examples():
    assert check_lower_bound(QContext(20), 10)
    assert check_lower_bound(QContext(12), 6)
    assert check_lower_bound(QContext(5), 1)
    with pytest.raises(ValueError):
        check_lower_bound(QContext(12), 7)
    assert check_quantum_bound(QContext(12), 6)
    assert check_quantum_triangle(QContext(12), 5, 6)
    with pytest.raises(ValueError):
        check_quantum_triangle(QContext(12), 0, 3)


@given(st.integers(3, 400), st.data())
def test_triangle_scalar(eps, data):
    n = data.draw(st.integers(1, 2 * eps - 1))
    m = data.draw(st.integers(1, 2 * eps - n))
    assert check_quantum_triangle(QContext(eps), n, m)


@given(st.integers(3, 400), st.data())
def test_lower_bound_scalar(eps, data):
    n = data.draw(st.integers(1, eps // 2))
    assert check_lower_bound(QContext(eps), n)
    assert qint(QContext(eps), n).value >= n / 2 - 1e-12


def test_vectorised_sweeps_small():
    for eps in range(3, 40):
        assert triangle_counterexamples(eps) == []
        assert upper_bound_counterexamples(eps) == []
        assert lower_bound_counterexamples(eps) == []


def test_sine_form():
    eps = 23
    assert qint(QContext(eps), 5).value == pytest.approx(math.sin(5 * math.pi / eps) / math.sin(math.pi / eps))
