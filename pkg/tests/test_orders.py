"""Linear orders, adjacent swaps, and the descent-preserving rewiring map."""

import pytest

from wreathstats import stats
from wreathstats.errors import DomainError, OrderError
from wreathstats.orders import (
    LinearOrder,
    adjacent_swap,
    build_order,
    less,
    order_from_spec,
    psi,
)
from wreathstats.perm import ColoredPermutation, GroupSpec, enumerate_group
from wreathstats.qpoly import BiPoly


def signed(letters):
    return tuple((abs(v), 1 if v < 0 else 0) for v in letters)


def test_builtin_orders():
    assert build_order("ar", 2, 2).letters == signed([-1, -2, 1, 2])
    assert build_order("natural", 2, 2).letters == signed([-2, -1, 1, 2])
    assert build_order("friends_asc", 3, 2).letters == (
        (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)
    )
    assert build_order("friends_desc", 3, 2).letters == (
        (1, 2), (1, 1), (1, 0), (2, 2), (2, 1), (2, 0)
    )
    assert build_order("rlen", 3, 2).letters == (
        (2, 2), (2, 1), (1, 2), (1, 1), (1, 0), (2, 0)
    )
    # rlen and natural agree at r=2
    assert build_order("rlen", 2, 3).letters == build_order("natural", 2, 3).letters


def test_random_orders_reproducible():
    a = build_order("random", 2, 3, seed=7)
    b = order_from_spec("random:7", 2, 3)
    assert a.letters == b.letters
    assert build_order("random", 2, 3, seed=8).letters != a.letters
    with pytest.raises(OrderError):
        order_from_spec("random", 2, 3)


def test_explicit_order_spec():
    order = order_from_spec("explicit:-1,1,-2,2", 2, 2)
    assert order.letters == signed([-1, 1, -2, 2])
    with pytest.raises(OrderError):
        order_from_spec("explicit:-1,1,-2", 2, 2)
    with pytest.raises(OrderError):
        order_from_spec("explicit:-1,1,-2,-2", 2, 2)
    with pytest.raises(OrderError):
        order_from_spec("mystery", 2, 2)


def test_ar_rejected_beyond_two_colors():
    with pytest.raises(OrderError):
        build_order("ar", 3, 2)


def test_less_is_a_strict_total_order():
    order = build_order("ar", 2, 2)
    assert less((1, 1), (2, 1), order)   # -1 < -2 in this order
    letters = order.letters
    for a in letters:
        assert not less(a, a, order)
        for b in letters:
            if a != b:
                assert less(a, b, order) != less(b, a, order)
    with pytest.raises(OrderError):
        less((3, 0), (1, 0), order)


def test_adjacent_swap():
    natural = build_order("natural", 2, 2)
    swapped = adjacent_swap(natural, 2)
    assert swapped.letters == signed([-2, 1, -1, 2])
    assert adjacent_swap(swapped, 2) == natural
    assert sum(1 for a, b in zip(natural.letters, swapped.letters) if a != b) == 2
    ar = build_order("ar", 2, 3)
    for j in range(1, 6):
        assert adjacent_swap(adjacent_swap(ar, j), j) == ar
    with pytest.raises(OrderError):
        adjacent_swap(natural, 4)
    with pytest.raises(OrderError):
        adjacent_swap(natural, 0)


# -- psi


def test_psi_swaps_when_both_letters_present():
    order = LinearOrder(2, 2, signed([-1, 1, -2, 2]))
    sigma = ColoredPermutation.from_window((1, -2))
    out = psi(sigma, order, 2)  # ranks 2,3 hold letters 1 and -2
    assert out.signed_window() == (-2, 1)
    # descent sets transfer to the swapped order
    swapped = adjacent_swap(order, 2)
    assert stats.des_set(sigma, order) == ()
    assert stats.des_set(out, swapped) == ()


def test_psi_zero_sum_pair_is_identity():
    natural = build_order("natural", 2, 3)
    j = 3  # natural(3) = -1, natural(4) = 1
    for sigma in enumerate_group(GroupSpec("bn", 3)):
        assert psi(sigma, natural, j) == sigma


def test_psi_requires_two_colors():
    with pytest.raises(DomainError):
        psi(ColoredPermutation.identity(2, 3), build_order("friends_asc", 3, 2), 1)


def _psi_bijection_preserves_descents(order, n):
    group = list(enumerate_group(GroupSpec("bn", n)))
    for j in range(1, 2 * n):
        swapped = adjacent_swap(order, j)
        images = set()
        for sigma in group:
            image = psi(sigma, order, j)
            images.add(image)
            assert psi(image, order, j) == sigma  # involution
            assert stats.des_set(sigma, order) == stats.des_set(image, swapped)
        assert len(images) == len(group)


@pytest.mark.parametrize("name", ["natural", "ar", "friends_desc", "friends_asc", "rlen"])
def test_psi_descent_preservation_builtin_orders(name):
    _psi_bijection_preserves_descents(build_order(name, 2, 3), 3)


@pytest.mark.parametrize("seed", range(50))
def test_psi_descent_preservation_random_orders(seed):
    _psi_bijection_preserves_descents(build_order("random", 2, 3, seed=seed), 3)


# -- distribution invariance across orders


def _maj_multiset(order, n):
    out = {}
    for sigma in enumerate_group(GroupSpec("bn", n)):
        m = stats.maj(sigma, order)
        out[m] = out.get(m, 0) + 1
    return out


@pytest.mark.parametrize("n", [1, 2, 3])
def test_maj_multiset_order_invariant(n):
    base = _maj_multiset(build_order("natural", 2, n), n)
    for name in ("ar", "friends_desc", "friends_asc"):
        assert _maj_multiset(build_order(name, 2, n), n) == base
    for seed in range(10):
        assert _maj_multiset(build_order("random", 2, n, seed=seed), n) == base


def _fmaj_poly(order, n, weighted=False):
    terms = {}
    for sigma in enumerate_group(GroupSpec("bn", n)):
        w = stats.sign(sigma) if weighted else 1
        key = (stats.fmaj(sigma, order), 0)
        terms[key] = terms.get(key, 0) + w
    return BiPoly(terms)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_fmaj_distribution_order_invariant(n):
    from wreathstats.qpoly import closed_form

    expected = closed_form("poincare", n)
    for seed in range(25):
        assert _fmaj_poly(build_order("random", 2, n, seed=seed), n) == expected


@pytest.mark.parametrize("n", [1, 2, 3])
def test_signed_fmaj_invariant_across_zero_sum_family(n):
    # interleaved order -1 < 1 < -2 < 2 < ...; swapping any rank pair (2i-1, 2i)
    # exchanges a letter with its own negative, so the signed distribution of
    # the flag major index is unchanged across all 2^n such orders.
    import itertools

    base_letters = []
    for v in range(1, n + 1):
        base_letters += [(v, 1), (v, 0)]
    base = LinearOrder(2, n, tuple(base_letters))
    reference = _fmaj_poly(base, n, weighted=True)
    for mask in itertools.product((0, 1), repeat=n):
        order = base
        for i, bit in enumerate(mask):
            if bit:
                order = adjacent_swap(order, 2 * i + 1)
        assert _fmaj_poly(order, n, weighted=True) == reference
