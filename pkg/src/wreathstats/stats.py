"""Numerical statistics on colored permutations.

Each statistic is a pure function of an element, or of an element and a
linear order.  No order-sensitive statistic defaults its order: callers pass
a :class:`~wreathstats.orders.LinearOrder` explicitly.

Formulas (window letter at position i is pi(i) with color z_i):

    inv      pairs i < j whose letters compare descending under the order
    Des/des/maj   descent positions in 1..n-1, their count, their sum
    neg/csum/ncsum   |{z_i != 0}|, sum of nonzero colors, sum of (pi(i)-1)
    nsum     sum of pi(i) over colored positions               (r = 2)
    fmaj     r*maj + csum
    nmaj     maj + nsum                                        (r = 2)
    ndes     des + neg                                         (r = 2)
    desA/desB/eps/fdes   des, des + eps, [z_1 != 0], 2*des + eps   (r = 2)
    len      inv under the rlen order + ncsum + csum
    sign     (-1)^len                                          (r <= 2)
    csignF   (-1)^(inv + csum)  under the supplied order
    ldes     des + csum
    lmaj     maj + ncsum + csum
    exc      |{pi(i) > i}|;  excB the same on |window|         (excB: r = 2)
    excR     exc + csum;  fexc = 2*excB + eps                  (fexc: r = 2)
    den      three-clause Denert count on pi (see den());  denB on |window|
    denR     r*den + csum;  fden = 2*denB + neg                (fden: r = 2)
    finv     r*inv + csum
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, MissingOrder, ShapeMismatch
from .orders import LinearOrder
from .perm import ColoredPermutation


def _check_shape(g: ColoredPermutation, order: LinearOrder) -> None:
    if order.r != g.r or order.n != g.n:
        raise ShapeMismatch(
            f"order is for (r={order.r}, n={order.n}), element is (r={g.r}, n={g.n})"
        )


def _ranks(g: ColoredPermutation, order: LinearOrder) -> list[int]:
    _check_shape(g, order)
    rank = order.rank
    return [rank[letter] for letter in g.window()]


@dataclass(frozen=True)
class OrderStats:
    inv: int
    des_set: tuple[int, ...]
    des: int
    maj: int


def order_stats(g: ColoredPermutation, order: LinearOrder) -> OrderStats:
    """inv, descent set (1-based), des and maj of g under the given order."""
    rs = _ranks(g, order)
    n = g.n
    inv_count = sum(1 for i in range(n) for j in range(i + 1, n) if rs[i] > rs[j])
    des_set = tuple(i + 1 for i in range(n - 1) if rs[i] > rs[i + 1])
    return OrderStats(inv_count, des_set, len(des_set), sum(des_set))


def inv(g: ColoredPermutation, order: LinearOrder) -> int:
    return order_stats(g, order).inv


def des_set(g: ColoredPermutation, order: LinearOrder) -> tuple[int, ...]:
    return order_stats(g, order).des_set


def des(g: ColoredPermutation, order: LinearOrder) -> int:
    return order_stats(g, order).des


def maj(g: ColoredPermutation, order: LinearOrder) -> int:
    return order_stats(g, order).maj


@dataclass(frozen=True)
class ColorStats:
    neg_set: tuple[int, ...]
    neg: int
    csum: int
    ncsum: int
    nsum: int | None  # r = 2 only


def color_stats(g: ColoredPermutation) -> ColorStats:
    """Color-side statistics; nsum is populated only for r = 2."""
    neg_positions = tuple(i + 1 for i, c in enumerate(g.z) if c)
    csum_val = sum(c for c in g.z if c)
    ncsum_val = sum(g.pi[i - 1] - 1 for i in neg_positions)
    nsum_val = sum(g.pi[i - 1] for i in neg_positions) if g.r == 2 else None
    return ColorStats(neg_positions, len(neg_positions), csum_val, ncsum_val, nsum_val)


def neg(g: ColoredPermutation) -> int:
    return sum(1 for c in g.z if c)


def csum(g: ColoredPermutation) -> int:
    return sum(c for c in g.z if c)


def ncsum(g: ColoredPermutation) -> int:
    return sum(v - 1 for v, c in zip(g.pi, g.z) if c)


def nsum(g: ColoredPermutation) -> int:
    if g.r != 2:
        raise DomainError("nsum is defined on B_n (r=2)")
    return sum(v for v, c in zip(g.pi, g.z) if c)


def fmaj(g: ColoredPermutation, order: LinearOrder) -> int:
    """Flag major index: r*maj + csum."""
    return g.r * maj(g, order) + csum(g)


def nmaj(g: ColoredPermutation, order: LinearOrder) -> int:
    if g.r != 2:
        raise DomainError("nmaj is defined on B_n (r=2)")
    return maj(g, order) + nsum(g)


def ndes(g: ColoredPermutation, order: LinearOrder) -> int:
    if g.r != 2:
        raise DomainError("ndes is defined on B_n (r=2)")
    return des(g, order) + neg(g)


def eps(g: ColoredPermutation) -> int:
    """1 iff the first window entry is colored (negative), else 0."""
    return 1 if g.n >= 1 and g.z[0] != 0 else 0


def des_a(g: ColoredPermutation, order: LinearOrder) -> int:
    if g.r != 2:
        raise DomainError("desA is defined on B_n (r=2)")
    return des(g, order)


def des_b(g: ColoredPermutation, order: LinearOrder) -> int:
    if g.r != 2:
        raise DomainError("desB is defined on B_n (r=2)")
    return des(g, order) + eps(g)


def fdes(g: ColoredPermutation, order: LinearOrder) -> int:
    if g.r != 2:
        raise DomainError("fdes is defined on B_n (r=2)")
    return 2 * des(g, order) + eps(g)


@dataclass(frozen=True)
class DescentVariants:
    desA: int
    desB: int
    eps: int
    fdes: int


def descent_variants(g: ColoredPermutation, order: LinearOrder) -> DescentVariants:
    d = des_a(g, order)
    e = eps(g)
    return DescentVariants(d, d + e, e, 2 * d + e)


# ---------------------------------------------------------------------------
# Length and signs


def _rlen_key(letter: tuple[int, int]) -> tuple[int, int, int]:
    # Colored letters first, by decreasing value then decreasing color;
    # uncolored letters last, ascending.
    v, c = letter
    if c:
        return (0, -v, -c)
    return (1, v, 0)


def length(g: ColoredPermutation) -> int:
    """Minimal word length in the standard generators: inv_rlen + ncsum + csum.

    The inversion count uses the alphabet order that puts every colored
    letter below every uncolored one (colored block by decreasing value); for
    r = 2 this is the natural signed order, and for r = 1 it is plain inv.
    """
    keys = [_rlen_key(letter) for letter in g.window()]
    n = g.n
    inv_count = sum(1 for i in range(n) for j in range(i + 1, n) if keys[i] > keys[j])
    return inv_count + ncsum(g) + csum(g)


def length_bn(g: ColoredPermutation) -> int:
    """B_n-specific length: integer-window inversions plus nsum."""
    if g.r != 2:
        raise DomainError("length_bn is defined on B_n (r=2)")
    w = g.signed_window()
    n = g.n
    inv_count = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
    return inv_count + nsum(g)


def sign(g: ColoredPermutation) -> int:
    if g.r > 2:
        raise DomainError("sign is defined for r <= 2; see csignF for general r")
    return -1 if length(g) % 2 else 1


def csign_f(g: ColoredPermutation, order: LinearOrder) -> int:
    """(-1)^(inv + csum) under the supplied order (friends order in identities)."""
    return -1 if (inv(g, order) + csum(g)) % 2 else 1


def ldes(g: ColoredPermutation, order: LinearOrder) -> int:
    return des(g, order) + csum(g)


def lmaj(g: ColoredPermutation, order: LinearOrder) -> int:
    return maj(g, order) + ncsum(g) + csum(g)


# ---------------------------------------------------------------------------
# Excedance and Denert


def exc(g: ColoredPermutation) -> int:
    return sum(1 for i, v in enumerate(g.pi, start=1) if v > i)


def exc_b(g: ColoredPermutation) -> int:
    if g.r != 2:
        raise DomainError("excB is defined on B_n (r=2)")
    return exc(g)


def exc_r(g: ColoredPermutation) -> int:
    return exc(g) + csum(g)


def fexc(g: ColoredPermutation) -> int:
    if g.r != 2:
        raise DomainError("fexc is defined on B_n (r=2)")
    return 2 * exc_b(g) + eps(g)


def _den_of(values: tuple[int, ...]) -> int:
    # Denert's three-clause pair count.  Note the weak inequalities against k
    # in the first two clauses; with strict ones the statistic is not even
    # Mahonian on S_2.
    n = len(values)
    total = 0
    for l in range(1, n + 1):
        vl = values[l - 1]
        for k in range(l + 1, n + 1):
            vk = values[k - 1]
            if vk < vl <= k:
                total += 1
            elif vl <= k < vk:
                total += 1
            elif k < vk < vl:
                total += 1
    return total


def den(g: ColoredPermutation) -> int:
    """Denert's statistic of the underlying permutation."""
    return _den_of(g.pi)


def den_b(g: ColoredPermutation) -> int:
    if g.r != 2:
        raise DomainError("denB is defined on B_n (r=2)")
    return _den_of(g.pi)  # |window| = pi


def den_r(g: ColoredPermutation) -> int:
    return g.r * den(g) + csum(g)


def fden(g: ColoredPermutation) -> int:
    if g.r != 2:
        raise DomainError("fden is defined on B_n (r=2)")
    return 2 * den_b(g) + neg(g)


def finv(g: ColoredPermutation, order: LinearOrder) -> int:
    """Flag inversion number: r*inv + csum."""
    return g.r * inv(g, order) + csum(g)


# ---------------------------------------------------------------------------
# Dispatch table (CLI and generating functions)

#: Statistics that take a linear order.
ORDER_SENSITIVE = frozenset(
    {"inv", "des", "maj", "fmaj", "nmaj", "ndes", "desA", "desB", "fdes",
     "ldes", "lmaj", "finv", "csignF"}
)

_PLAIN = {
    "neg": neg,
    "nsum": nsum,
    "csum": csum,
    "ncsum": ncsum,
    "eps": eps,
    "len": length,
    "sign": sign,
    "exc": exc,
    "excB": exc_b,
    "excR": exc_r,
    "fexc": fexc,
    "den": den,
    "denB": den_b,
    "denR": den_r,
    "fden": fden,
}

_ORDERED = {
    "inv": inv,
    "des": des,
    "maj": maj,
    "fmaj": fmaj,
    "nmaj": nmaj,
    "ndes": ndes,
    "desA": des_a,
    "desB": des_b,
    "fdes": fdes,
    "ldes": ldes,
    "lmaj": lmaj,
    "finv": finv,
    "csignF": csign_f,
}

STAT_NAMES = tuple(sorted(_PLAIN) + sorted(_ORDERED))


def evaluate(name: str, g: ColoredPermutation, order: LinearOrder | None = None) -> int:
    """Evaluate a statistic by CLI name, enforcing explicit orders."""
    if name in _ORDERED:
        if order is None:
            raise MissingOrder(f"statistic {name!r} needs a linear order")
        return _ORDERED[name](g, order)
    if name in _PLAIN:
        return _PLAIN[name](g)
    raise DomainError(f"unknown statistic {name!r}; known: {', '.join(STAT_NAMES)}")
