"""BFS word-length oracles against the closed length formulas."""

import pytest

from wreathstats import stats
from wreathstats.errors import BudgetExceeded, NotGenerated, ShapeInvalid
from wreathstats.oracle import (
    GeneratorSet,
    build_generators,
    cayley_distances,
    compare_lengths,
    ell_d,
    ell_d_certified,
    two_dim_distances,
)
from wreathstats.orders import build_order
from wreathstats.perm import (
    ColoredPermutation,
    GroupSpec,
    enumerate_group,
    gamma,
    make,
)


def test_generator_sets():
    bn2 = build_generators("bn_coxeter", 2, 2)
    assert {g.signed_window() for g in bn2.elements} == {(-1, 2), (2, 1)}
    sn4 = build_generators("sn_coxeter", 1, 4)
    assert len(sn4.elements) == 3
    g52 = build_generators("grn_generators", 5, 2)
    assert len(g52.elements) == 2
    assert g52.elements[0].z == (1, 0)
    with pytest.raises(ShapeInvalid):
        build_generators("mystery", 2, 2)
    with pytest.raises(ShapeInvalid):
        build_generators("two_dim", 2, 0)


@pytest.mark.parametrize("r,n", [(1, 4), (2, 3), (3, 2), (4, 2)])
def test_two_dim_generator_count(r, n):
    gens = build_generators("two_dim", r, n)
    assert len(gens.elements) == n * (r - 1) + (n - 1) * r


def test_two_dim_r1_is_adjacent_transpositions():
    gens = build_generators("two_dim", 1, 4)
    expected = set()
    for i in range(3):
        t = list(range(4))
        t[i], t[i + 1] = t[i + 1], t[i]
        expected.add(tuple(t))
    assert set(gens.elements) == expected


def test_b2_distance_table():
    dist = cayley_distances(build_generators("bn_coxeter", 2, 2), GroupSpec("bn", 2))
    by_window = {g.signed_window(): d for g, d in dist.items()}
    assert by_window == {
        (1, 2): 0,
        (-1, 2): 1,
        (2, 1): 1,
        (-2, 1): 2,
        (2, -1): 2,
        (-2, -1): 3,
        (1, -2): 3,
        (-1, -2): 4,
    }


def test_s3_distance_multiset_matches_inv():
    dist = cayley_distances(build_generators("sn_coxeter", 1, 3), GroupSpec("sn", 3))
    assert sorted(dist.values()) == [0, 1, 1, 2, 2, 3]


def test_identity_distance_zero():
    dist = cayley_distances(build_generators("grn_generators", 3, 2), GroupSpec("grn", 2, 3))
    assert dist[ColoredPermutation.identity(2, 3)] == 0


@pytest.mark.parametrize("n", range(1, 7))
def test_sn_length_oracle(n):
    rows = compare_lengths("sn-length", n)
    assert len(rows) == __import__("math").factorial(n)
    assert all(row["match"] for row in rows)


@pytest.mark.parametrize("n", range(1, 5))
def test_bn_length_oracle(n):
    rows = compare_lengths("bn-length", n)
    assert all(row["match"] for row in rows)


@pytest.mark.parametrize("r,n", [(3, 2), (4, 2), (3, 3)])
def test_grn_length_oracle(r, n):
    rows = compare_lengths("grn-length", n, r)
    assert all(row["match"] for row in rows)


def test_bn_distance_multiset_is_poincare():
    from wreathstats.qpoly import closed_form

    for n in range(1, 5):
        dist = cayley_distances(build_generators("bn_coxeter", 2, n), GroupSpec("bn", n))
        counts = {}
        for d in dist.values():
            counts[(d, 0)] = counts.get((d, 0), 0) + 1
        from wreathstats.qpoly import BiPoly

        assert BiPoly(counts) == closed_form("poincare", n)


def test_directed_bfs_handles_color_generator():
    # s_0 has order r; its powers sit at increasing distance
    dist = cayley_distances(build_generators("grn_generators", 4, 1), GroupSpec("grn", 1, 4))
    by_color = {g.z[0]: d for g, d in dist.items()}
    assert by_color == {0: 0, 1: 1, 2: 2, 3: 3}


def test_not_generated_detected():
    # dropping s_0 leaves the color classes unreachable
    full = build_generators("grn_generators", 2, 2)
    crippled = GeneratorSet("grn_generators", 2, 2, full.elements[1:])
    with pytest.raises(NotGenerated):
        cayley_distances(crippled, GroupSpec("bn", 2))


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        cayley_distances(build_generators("sn_coxeter", 1, 9), GroupSpec("sn", 9), budget=100)
    with pytest.raises(BudgetExceeded):
        two_dim_distances(3, 3, budget=1000)


@pytest.mark.parametrize("r,n", [(1, 4), (2, 2), (2, 3), (3, 2), (6, 1)])
def test_elld_matches_finv_small(r, n):
    order = build_order("friends_asc", r, n)
    for g in enumerate_group(GroupSpec("grn", n, r)):
        assert ell_d(g) == stats.finv(g, order)


def test_elld_examples():
    assert ell_d(make(2, 2, [1, 2], [1, 0])) == 1
    assert ell_d(ColoredPermutation.identity(3, 2)) == 0


def test_known_word_length_shortfall_at_2_4():
    # The flag-inversion formula overshoots the true word metric for 19 of the
    # 384 elements here; pin the smallest one so the discrepancy stays visible.
    g = make(4, 2, [3, 4, 2, 1], [0, 0, 1, 1])
    assert stats.finv(g, build_order("friends_asc", 2, 4)) == 12
    assert ell_d(g) == 10


def test_certified_word_realizes_embedding():
    # the constructive word always has length r*inv + csum and lands on gamma(g)
    for r, n in [(2, 3), (3, 2)]:
        order = build_order("friends_asc", r, n)
        for g in enumerate_group(GroupSpec("grn", n, r)):
            value, word = ell_d_certified(g)
            assert value == stats.finv(g, order)
            state = tuple(range(r * n))
            for t in word:
                state = tuple(state[t[p]] for p in range(r * n))
            assert state == gamma(g)


def test_certified_word_for_large_example():
    # S_12 is far beyond BFS budgets; the construction still yields its word
    g = make(3, 4, [2, 1, 3], [0, 3, 2])
    value, word = ell_d_certified(g)
    assert value == 9 == stats.finv(g, build_order("friends_asc", 4, 3))
    state = tuple(range(12))
    for t in word:
        state = tuple(state[t[p]] for p in range(12))
    assert state == gamma(g)


def test_compare_lengths_elld_rows():
    rows = compare_lengths("elld", 3, 2)
    assert len(rows) == 48
    assert all(row["match"] for row in rows)
