"""Element construction, the group law, enumeration, and structural maps."""

import random

import pytest

from wreathstats.errors import (
    BudgetExceeded,
    ColorOutOfRange,
    DomainError,
    NotABijection,
    ParseError,
    ShapeInvalid,
    ShapeMismatch,
)
from wreathstats.perm import (
    ColoredPermutation,
    GroupSpec,
    enumerate_group,
    format_element,
    gamma,
    group_order,
    is_increasing_window,
    letter_index,
    make,
    parse_element,
    phi,
    tau_pi_decompose,
    window_compose,
    xi,
)
from wreathstats import stats


def test_make_and_window():
    g = make(3, 4, [2, 1, 3], [0, 3, 2])
    assert g.window() == ((2, 0), (1, 3), (3, 2))
    assert format_element(g) == "2^0,1^3,3^2"


def test_make_identity():
    g = make(2, 1, [1, 2], [0, 0])
    assert g.is_identity()


def test_make_rejects_bad_input():
    with pytest.raises(NotABijection):
        make(2, 2, [1, 1], [0, 0])
    with pytest.raises(ColorOutOfRange):
        make(2, 2, [1, 2], [0, 2])
    with pytest.raises(ShapeInvalid):
        make(3, 2, [1, 2], [0, 0])


def test_product_example():
    a = make(2, 2, [2, 1], [1, 0])
    b = make(2, 2, [2, 1], [0, 1])
    c = a * b
    assert c.pi == (1, 2) and c.z == (0, 0)


def test_product_identity_law_g33():
    e = ColoredPermutation.identity(3, 3)
    for g in enumerate_group(GroupSpec("grn", 3, 3)):
        assert e * g == g
        assert g * e == g


def test_product_coxeter_involution():
    s1 = make(4, 1, [2, 1, 3, 4], [0, 0, 0, 0])
    assert (s1 * s1).is_identity()


def test_product_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        make(2, 2, [1, 2], [0, 0]) * make(2, 3, [1, 2], [0, 0])


def test_inverse_example():
    g = make(2, 2, [2, 1], [1, 0])
    h = g.inverse()
    assert h.pi == (2, 1) and h.z == (0, 1)


@pytest.mark.parametrize("n,r", [(2, 3), (3, 2), (3, 3)])
def test_inverse_exhaustive(n, r):
    for g in enumerate_group(GroupSpec("grn", n, r)):
        assert (g * g.inverse()).is_identity()
        assert (g.inverse() * g).is_identity()


@pytest.mark.parametrize("family,n,r", [("sn", 4, 1), ("bn", 3, 2), ("grn", 3, 3), ("grn", 2, 4)])
def test_associativity_sampled(family, n, r):
    elems = list(enumerate_group(GroupSpec(family, n, r)))
    rng = random.Random(20240803)
    for _ in range(1000):
        a, b, c = (rng.choice(elems) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_bar():
    g = make(3, 4, [2, 1, 3], [0, 3, 2])
    assert g.bar() == g  # [2,1,3] is an involution, colors unchanged
    g2 = make(3, 2, [2, 3, 1], [1, 0, 0])
    assert g2.bar().pi == (3, 1, 2) and g2.bar().z == (1, 0, 0)
    for g in enumerate_group(GroupSpec("grn", 2, 3)):
        assert g.bar().bar() == g


@pytest.mark.parametrize(
    "family,n,r,expected",
    [
        ("sn", 4, 1, 24),
        ("bn", 3, 2, 48),
        ("dn", 3, 2, 24),
        ("grn", 3, 3, 162),
        ("un", 3, 2, 8),
        ("udn", 3, 2, 4),
        ("colorn", 3, 3, 27),
        ("sn", 0, 1, 1),
        ("bn", 0, 2, 1),
        ("dn", 0, 2, 1),
        ("un", 0, 2, 1),
    ],
)
def test_enumeration_cardinalities(family, n, r, expected):
    spec = GroupSpec(family, n, r)
    elems = list(enumerate_group(spec))
    assert len(elems) == expected == group_order(spec)
    assert len(set(elems)) == expected


def test_colorni_cardinality():
    spec = GroupSpec("colorni", 3, 3, i=2)
    elems = list(enumerate_group(spec))
    assert len(elems) == 9 == group_order(spec)
    assert all(g.z[-1] == 2 for g in elems)


def test_enumeration_is_lex_on_z_pi():
    for spec in (GroupSpec("bn", 3), GroupSpec("grn", 2, 3)):
        keys = [(g.z, g.pi) for g in enumerate_group(spec)]
        assert keys == sorted(keys)


def test_enumerate_un_n2():
    windows = [g.signed_window() for g in enumerate_group(GroupSpec("un", 2))]
    assert sorted(windows) == [(-2, -1), (-2, 1), (-1, 2), (1, 2)]
    assert all(w[0] < w[1] for w in windows)


def test_enumerate_dn_n2():
    elems = list(enumerate_group(GroupSpec("dn", 2)))
    assert len(elems) == 4
    assert all(stats.neg(g) % 2 == 0 for g in elems)


def test_enumerate_sn_tiny():
    assert [g.pi for g in enumerate_group(GroupSpec("sn", 0))] == [()]
    assert [g.pi for g in enumerate_group(GroupSpec("sn", 1))] == [(1,)]


def test_budget():
    with pytest.raises(BudgetExceeded):
        list(enumerate_group(GroupSpec("sn", 9), budget=1000))
    # explicitly unlimited is allowed
    next(iter(enumerate_group(GroupSpec("sn", 9), budget=None)))


# -- tau/pi factorization


def test_tau_pi_examples():
    sigma = ColoredPermutation.from_window((1, -2))
    tau, pi = tau_pi_decompose(sigma)
    assert tau.signed_window() == (-2, 1)
    assert pi.pi == (2, 1)

    sigma = ColoredPermutation.from_window((-2, 1))
    tau, pi = tau_pi_decompose(sigma)
    assert tau.signed_window() == (-2, 1)
    assert pi.pi == (1, 2)

    plain = ColoredPermutation.from_window((2, 3, 1))
    tau, pi = tau_pi_decompose(plain)
    assert tau.is_identity()
    assert pi.pi == (2, 3, 1)


@pytest.mark.parametrize("n", range(6))
def test_tau_pi_round_trip_unique(n):
    seen = set()
    for sigma in enumerate_group(GroupSpec("bn", n)):
        tau, pi = tau_pi_decompose(sigma)
        assert is_increasing_window(tau)
        assert window_compose(tau, pi.pi) == sigma
        seen.add((tau, pi))
    assert len(seen) == group_order(GroupSpec("bn", n))


# -- phi


def test_phi_examples():
    tau = ColoredPermutation.from_window((-1, 2))
    assert phi(tau, 1).signed_window() == (-3, -1, 2)
    assert phi(tau, 2).signed_window() == (-1, 2, 3)


def test_phi_rejects_non_increasing():
    with pytest.raises(DomainError):
        phi(ColoredPermutation.from_window((2, 1)), 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_phi_partitions_un(n):
    smaller = list(enumerate_group(GroupSpec("un", n - 1)))
    img1 = {phi(t, 1) for t in smaller}
    img2 = {phi(t, 2) for t in smaller}
    assert len(img1) == len(img2) == len(smaller)
    assert not img1 & img2
    assert img1 | img2 == set(enumerate_group(GroupSpec("un", n)))
    for t in img1:
        assert t.signed_window()[0] == -n
    for t in img2:
        assert t.signed_window()[-1] == n


@pytest.mark.parametrize("n", range(1, 6))
def test_phi_neg_and_sign_relations(n):
    for t in enumerate_group(GroupSpec("un", n - 1)):
        t1, t2 = phi(t, 1), phi(t, 2)
        assert stats.neg(t1) == stats.neg(t) + 1
        assert stats.neg(t2) == stats.neg(t)
        assert stats.sign(t1) == (-1) ** n * stats.sign(t)
        assert stats.sign(t2) == stats.sign(t)
        assert stats.nsum(t1) == stats.nsum(t) + n
        assert stats.nsum(t2) == stats.nsum(t)


# -- xi


def test_xi_examples():
    c = make(2, 3, [1, 2], [1, 0])
    out = xi(c, 2)
    assert out.z == (1, 0, 2) and out.pi == (1, 2, 3)
    with pytest.raises(ColorOutOfRange):
        xi(c, 3)
    with pytest.raises(DomainError):
        xi(make(2, 3, [2, 1], [0, 0]), 1)


def test_xi_partitions_and_relations():
    base = list(enumerate_group(GroupSpec("colorn", 2, 3)))
    images = [xi(c, j) for j in range(3) for c in base]
    assert len(set(images)) == 27
    assert set(images) == set(enumerate_group(GroupSpec("colorn", 3, 3)))
    n = 3
    for c in base:
        for j in range(3):
            out = xi(c, j)
            assert stats.csum(out) == stats.csum(c) + j
            if j == 0:
                assert stats.ncsum(out) == stats.ncsum(c)
            else:
                assert stats.ncsum(out) == stats.ncsum(c) + n - 1


# -- gamma


def test_gamma_paper_style_example():
    g = make(3, 4, [2, 1, 3], [0, 3, 2])
    expected_letters = [
        (2, 0), (2, 1), (2, 2), (2, 3),
        (1, 3), (1, 0), (1, 1), (1, 2),
        (3, 2), (3, 0), (3, 1), (3, 3),
    ]
    assert gamma(g) == tuple(letter_index(v, c, 4) for v, c in expected_letters)


def test_gamma_identity_and_injectivity():
    assert gamma(ColoredPermutation.identity(3, 4)) == tuple(range(12))
    images = {gamma(g) for g in enumerate_group(GroupSpec("grn", 3, 2))}
    assert len(images) == 48
    # at r=1 the embedding is the underlying permutation
    for g in enumerate_group(GroupSpec("sn", 4)):
        assert gamma(g) == tuple(v - 1 for v in g.pi)


# -- text format


def test_parse_round_trip():
    for text, r in [("2,4,3,1,5", 1), ("2,-4,3,1,-5", 2), ("2^0,1^3,3^2", 4)]:
        g = parse_element(text, r)
        assert format_element(g) == text


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as exc:
        parse_element("2,x,1", 1)
    assert exc.value.position == 2
    with pytest.raises(ParseError) as exc:
        parse_element("1,1", 1)
    assert exc.value.position == 2
    with pytest.raises(ParseError) as exc:
        parse_element("1,4", 1)  # value out of range for n=2
    assert exc.value.position == 2
    with pytest.raises(ParseError):
        parse_element("1^0,2^3", 3)  # color out of range
    with pytest.raises(ParseError):
        parse_element("0,1", 2)
