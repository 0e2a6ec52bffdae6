import random

import pytest

from ramcat import (
    GeneratedPreorder,
    ValidationError,
    antichain_preorder,
    chain_preorder,
    cofinal_companion,
    is_cofinal_map,
    is_tukey_map,
    monotonize,
    omega,
    omega_squared,
    preorder_from_pairs,
    preorder_predicates,
    validate_preorder,
    verify_trace,
)
from ramcat.tukey import locate_block, subset_bounded, subset_cofinal


def brute_bounded(p, subset):
    return any(all(p.le(x, b) for x in subset) for b in range(p.size))


def brute_cofinal(p, subset):
    return all(any(p.le(a, x) for x in subset) for a in range(p.size))


def top_class(p):
    rep = preorder_predicates(p)
    return {x for cls in rep.equivalence_classes for x in cls
            if all(any(p.le(a, y) for y in cls) for a in range(p.size))}


def test_validate_preorder():
    validate_preorder([[True, True], [False, True]])
    with pytest.raises(ValidationError):
        validate_preorder([[False, True], [False, True]])
    with pytest.raises(ValidationError):
        validate_preorder([[True, True, False], [False, True, True], [False, False, True]])


def test_antichain_predicates():
    rep = preorder_predicates(antichain_preorder(2))
    assert not rep.directed
    assert (0, 1) not in rep.bounded_subsets
    assert (0,) in rep.bounded_subsets


def test_chain_predicates():
    p = chain_preorder(3)
    rep = preorder_predicates(p)
    assert rep.directed
    assert len(rep.bounded_subsets) == 7  # every nonempty subset
    assert all(2 in s for s in rep.cofinal_subsets)
    assert len(rep.equivalence_classes) == 3


def test_quotient_collapses_equivalent_elements():
    p = preorder_from_pairs(3, [(0, 1), (1, 0), (1, 2)])
    rep = preorder_predicates(p)
    assert len(rep.equivalence_classes) == 2
    assert rep.quotient.size == 2
    assert rep.class_of[0] == rep.class_of[1] != rep.class_of[2]
    q = rep.quotient
    # the quotient is a partial order: antisymmetric
    assert not any(q.le(a, b) and q.le(b, a) and a != b for a in range(2) for b in range(2))


def test_predicates_agree_with_brute_force():
    p = preorder_from_pairs(4, [(0, 1), (0, 2), (1, 3)])
    rep = preorder_predicates(p)
    for mask in range(1, 16):
        subset = tuple(x for x in range(4) if mask >> x & 1)
        assert (subset in rep.bounded_subsets) == brute_bounded(p, subset)
        assert (subset in rep.cofinal_subsets) == brute_cofinal(p, subset)


def test_size_cap():
    with pytest.raises(ValidationError) as err:
        preorder_predicates(chain_preorder(16))
    assert err.value.code == "size_cap_exceeded"


def test_tukey_collapse_of_antichain_fails():
    verdict = is_tukey_map([0, 0], antichain_preorder(2), chain_preorder(1))
    assert not verdict.ok and verdict.witness == (0, 1)


def test_tukey_identity_holds():
    p = preorder_from_pairs(4, [(0, 1), (2, 3)])
    assert is_tukey_map(list(range(4)), p, p).ok


def test_every_map_between_directed_finite_preorders_is_tukey():
    rng = random.Random(7)
    directed = [chain_preorder(n) for n in (1, 2, 3, 4, 5)]
    directed.append(preorder_from_pairs(4, [(0, 2), (1, 2), (2, 3)]))
    directed.append(preorder_from_pairs(5, [(0, 2), (1, 2), (2, 4), (3, 4)]))
    checked = 0
    for a in directed:
        for b in directed:
            for _ in range(40):
                f = [rng.randrange(b.size) for _ in range(a.size)]
                assert is_tukey_map(f, a, b).ok
                checked += 1
    assert checked <= 100_000


def test_cofinal_iff_top_class_lands_in_top_class():
    rng = random.Random(11)
    pres = [chain_preorder(3), preorder_from_pairs(4, [(0, 2), (1, 2), (2, 3)]),
            preorder_from_pairs(4, [(0, 1), (1, 0), (0, 2), (2, 3)])]
    for a in pres:
        for b in pres:
            tops_a, tops_b = top_class(a), top_class(b)
            for _ in range(60):
                g = [rng.randrange(b.size) for _ in range(a.size)]
                expected = all(g[x] in tops_b for x in tops_a)
                assert is_cofinal_map(g, a, b).ok == expected, (g, tops_a, tops_b)


def test_cofinal_examples():
    assert is_cofinal_map([0, 1, 2], chain_preorder(3), chain_preorder(3)).ok
    verdict = is_cofinal_map([0, 0, 0], chain_preorder(3), chain_preorder(2))
    assert not verdict.ok and verdict.witness == (2,)
    assert is_cofinal_map([0, 0, 0], chain_preorder(3), chain_preorder(1)).ok


def test_companion_identity():
    om = omega()
    res = cofinal_companion(lambda n: n, om, om, 10)
    assert res.g == list(range(10))
    assert res.implication_ok


def test_companion_doubling():
    om = omega()
    res = cofinal_companion(lambda n: 2 * n, om, om, 20)
    assert res.g == [b // 2 for b in range(20)]
    assert res.checked_pairs > 0


def test_companion_constant_map_warns():
    om = omega()
    res = cofinal_companion(lambda n: 0, om, om, 10)
    assert res.implication_ok
    assert res.g == [9] * 10
    assert any("untestable" in w for w in res.warnings)


def test_monotonize_identity():
    om = omega()
    trace = monotonize(lambda n: n, om, om, steps=12)
    check = verify_trace(trace, om, om)
    assert check.ok
    assert trace.s == list(range(12))
    assert trace.b == list(range(12))


def test_monotonize_nonmonotone_map():
    om = omega()

    def f(n):
        return n + 10 if n % 2 == 0 else n // 2

    trace = monotonize(f, om, om, steps=30, prefix_size=30)
    check = verify_trace(trace, om, om)
    assert check.ok
    assert len(trace.fhat) == 30
    # literal monotonicity on the prefix
    keys = list(trace.fhat)
    for x in keys:
        for y in keys:
            if x <= y:
                assert trace.fhat[x] <= trace.fhat[y]


def test_monotonize_on_product_order():
    om2, om = omega_squared(), omega()
    trace = monotonize(lambda p: p[0] + p[1], om2, om, steps=10, prefix_size=30)
    check = verify_trace(trace, om2, om)
    assert check.ok
    # blocks are nonempty and the spine dominates its block
    for sn, block in zip(trace.s, trace.big_s):
        assert block
        assert all(om2.leq(x, sn) for x in block)


def test_membership_procedure_agrees_with_partition():
    om2 = omega_squared()
    trace = monotonize(lambda p: p[0] * p[1], om2, omega(), steps=8, prefix_size=20)
    for i, block in enumerate(trace.big_s):
        for x in block:
            assert locate_block(x, trace, om2) == i


def test_monotonize_rejects_bounded_input():
    bounded = GeneratedPreorder("flat", lambda i: 0, lambda x, y: True, lambda x, y: 0,
                                globally_bounded=True)
    with pytest.raises(ValidationError) as err:
        monotonize(lambda n: n, bounded, omega(), steps=3)
    assert err.value.code == "globally_bounded_input"


def test_broken_upper_bound_oracle_detected():
    broken = GeneratedPreorder("broken", lambda i: i, lambda x, y: x <= y, lambda x, y: 0,
                               globally_bounded=False)
    with pytest.raises(ValidationError) as err:
        monotonize(lambda n: n, broken, omega(), steps=5)
    assert err.value.code == "oracle_failure"


def test_cantor_enumeration_is_injective_and_total():
    om2 = omega_squared()
    prefix = om2.prefix(50)
    assert len(set(prefix)) == 50
    assert (0, 0) in prefix and (1, 0) in prefix and (0, 1) in prefix


def test_subset_helpers_match_definitions():
    p = preorder_from_pairs(3, [(0, 1)])
    for mask in range(1, 8):
        subset = [x for x in range(3) if mask >> x & 1]
        assert subset_bounded(p, mask) == brute_bounded(p, subset)
        assert subset_cofinal(p, mask) == brute_cofinal(p, subset)
