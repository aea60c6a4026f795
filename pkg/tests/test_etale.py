from fractions import Fraction

import pytest

from alcove.etale import (CLAIMS, FILTERS, HypothesisError, aux_x, aux_y, build_claim,
                          check_candidate, claim_instances, containment_check,
                          corollary_goal_test, faulhaber_sum_cubes, goal_sources, scan_level,
                          simple_free_test, summand_norm, sweep_claim)
from alcove.fusion import tensor_product
from alcove.lie import enumerate_alcove


def test_norms_and_aux():
    assert summand_norm("sl2", (10,)) == 10
    assert summand_norm("so5", (3, 4)) == 7
    assert summand_norm("g2", (3, 4)) == 9
    assert aux_x("so5", (3, 4)) == 3
    assert aux_x("so5", (4, 4)) == 3
    assert aux_x("g2", (3, 4)) == 4
    assert aux_x("sl3", (1019, 1019)) == 1018
    assert aux_y((3, 4)) == 2
    assert aux_y((0, 6)) == 2


def test_aux_x_is_largest_simple_free():
    for alg in ("sl3", "so5", "g2"):
        for w in enumerate_alcove(alg, 14):
            if not any(w):
                continue
            x = aux_x(alg, w)
            if x >= 0:
                assert simple_free_test(alg, w, (x, 0))
            assert not simple_free_test(alg, w, (x + 1, 0))


def test_simple_free():
    assert simple_free_test("sl2", (10,), (4,))
    assert not simple_free_test("sl2", (10,), (5,))
    assert simple_free_test("g2", (0, 4), (0, 1))


def test_faulhaber():
    assert faulhaber_sum_cubes(0) == 0
    assert faulhaber_sum_cubes(3) == 36
    total = 0
    for n in range(1, 10001):
        total += n ** 3
        if n % 997 == 0 or n == 10000:
            assert faulhaber_sum_cubes(n) == total
    with pytest.raises(ValueError):
        faulhaber_sum_cubes(-1)


def test_goal_test_tie_is_consistent():
    # sl2 level 28: (8) x (10) has simple-free summands (2), (4); [3] + [5] = [9]
    res = corollary_goal_test("sl2", 28, (8,), (10,))
    assert res.witnesses == ((2,), (4,))
    assert res.consistent and bool(res)
    assert res.lhs == pytest.approx(res.rhs)


def test_goal_test_violation():
    res = corollary_goal_test("sl2", 28, (12,), (18,))
    assert not res.consistent
    assert res.lhs > res.rhs


def test_goal_test_trivial_minimal():
    assert corollary_goal_test("so5", 5, (1, 0), (0, 0)).consistent


@pytest.mark.parametrize("alg, k, minimal", [
    ("sl2", 28, (10,)), ("sl3", 5, (2, 2)), ("sl3", 9, (1, 4)), ("sl3", 21, (4, 4)),
    ("so5", 3, (1, 2)), ("so5", 7, (2, 2)), ("g2", 3, (1, 1)), ("g2", 4, (3, 0)),
])
def test_known_minimal_summands_never_violated(alg, k, minimal):
    for src in enumerate_alcove(alg, k):
        assert corollary_goal_test(alg, k, src, minimal).consistent, src


def test_non_minimal_summand_can_be_violated():
    # (18) is a summand of the sl2 level-28 algebra but not its minimal one
    bad = [s for s in enumerate_alcove("sl2", 28) if not corollary_goal_test("sl2", 28, s, (18,))]
    assert bad == [(n,) for n in range(12, 27)]


def test_hypothesis_errors():
    with pytest.raises(HypothesisError):
        build_claim("B2-m0", 10, ell=4)
    with pytest.raises(HypothesisError):
        build_claim("B2-l0", 10, m=5)
    with pytest.raises(HypothesisError):
        build_claim("A2-diag", 10, ell=2, m=3)
    with pytest.raises(ValueError):
        build_claim("B2-m0", 10, m=4)
    with pytest.raises(ValueError):
        build_claim("C3", 10, ell=1)


def test_claim_examples():
    assert containment_check("A2-diag", 12, ell=4, m=3)
    assert containment_check("B2-m0", 12, ell=6)
    assert containment_check("B2-l0", 12, m=6)
    claim = build_claim("B2-m0", 12, ell=6)
    assert claim.sources == ((6, 0),) and claim.summands == ((0, 0), (0, 2))


def test_sl2_containment():
    # (2m)^{(x)2} contains (0) and (2)
    assert {(0,), (2,)} <= set(tensor_product("sl2", 10, (6,), (6,)))


def test_g2_small_l_literal_reading_fails():
    # the product with (0, m) in place of the minimal summand (1, m) misses the claimed summands
    misses = 0
    for k in range(10, 21):
        for params, claim in claim_instances("G2-l1", k):
            literal = tensor_product("g2", k, (1, claim.sources[0][1]), (0, params["m"]))
            misses += not all(literal.get(w, 0) for w in claim.summands)
    assert misses > 0


EXPECTED_FAILURES = {
    "B2-lowm": {(("ell", 1), ("m", 4)), (("ell", 2), ("m", 4))},
    "G2-midl-r0": {(("ell", 6), ("m", 1)), (("ell", 6), ("m", 2))},
    "G2-midl-r1": {(("ell", 7), ("m", 1))},
}


@pytest.mark.parametrize("claim_id", sorted(CLAIMS))
def test_containment_sweep_failures_pinned(claim_id):
    res = sweep_claim(claim_id, 14)
    assert res.instances > 0
    assert {p for _, p in res.failures} == EXPECTED_FAILURES.get(claim_id, set())


def test_failures_are_level_independent():
    for k in range(8, 15):
        assert not containment_check("G2-midl-r0", k, ell=6, m=1)
    assert containment_check("G2-midl-r0", 14, ell=6, m=3)


@pytest.mark.parametrize("alg, k, expected", [
    ("sl2", 3, []), ("sl2", 28, [(10,), (28,)]),
    ("sl3", 5, [(2, 2)]), ("sl3", 9, [(0, 9), (1, 4), (4, 1), (9, 0)]),
    ("so5", 2, [(2, 0)]), ("so5", 3, [(1, 2)]), ("so5", 7, [(2, 2)]),
    ("so5", 12, [(0, 6), (3, 2), (12, 0)]),
    ("g2", 3, [(1, 1)]), ("g2", 4, [(3, 0)]),
])
def test_scan_examples(alg, k, expected):
    assert [c.weight for c in scan_level(alg, k)] == expected


def test_scan_monotone_under_filters():
    chains = [(), ("twist",), ("twist", "root_lattice"), FILTERS]
    for alg in ("sl2", "sl3", "so5", "g2"):
        for k in range(1, 13):
            sets = [{c.weight for c in scan_level(alg, k, f)} for f in chains]
            for a, b in zip(sets, sets[1:]):
                assert b <= a


def test_scan_deterministic_and_nontrivial():
    a = scan_level("so5", 12)
    b = scan_level("so5", 12)
    assert a == b
    assert all(any(c.weight) for c in a)
    assert all(c.twist_trivial and c.in_root_lattice for c in a)


def test_candidate_records_tests():
    c = check_candidate("sl2", 28, (10,))
    assert c is not None and c.norm == Fraction(10)
    assert c.tests[0][0] == (8,)
    assert check_candidate("sl2", 28, (18,)) is None
    assert goal_sources("sl2", 28, (18,)) == ((12,),)
