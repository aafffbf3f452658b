"""Linear orders on the colored alphabet and the order-rewiring bijection.

A linear order ranks all r*n letters (value, color); every order-sensitive
statistic takes one explicitly.  Built-in families:

natural       -n < -(n-1) < ... < -1 < 1 < ... < n            (r = 2)
ar            -1 < -2 < ... < -n < 1 < 2 < ... < n            (r <= 2)
friends_desc  1^[r-1] < ... < 1 < 2^[r-1] < ... < 2 < ...
friends_asc   1 < 1^[1] < ... < 1^[r-1] < 2 < ...
rlen          n^[r-1] < ... < 1^[1] < 1 < 2 < ... < n

For r != 2, ``natural`` uses the same ranking pattern as ``rlen`` (they agree
at r = 2).  ``random`` orders are seeded Fisher-Yates shuffles of the
alphabet via ``random.Random(seed)`` and are fully reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .errors import DomainError, OrderError
from .perm import ColoredPermutation, Letter, format_letter

BUILTIN_ORDERS = ("natural", "ar", "friends_desc", "friends_asc", "rlen")


@dataclass(frozen=True)
class LinearOrder:
    """A total order on the r*n colored letters; letters[0] is smallest."""

    r: int
    n: int
    letters: tuple[Letter, ...]

    def __post_init__(self):
        expected = {(v, c) for v in range(1, self.n + 1) for c in range(self.r)}
        if set(self.letters) != expected or len(self.letters) != len(expected):
            missing = sorted(expected - set(self.letters))
            detail = f"; missing e.g. {missing[:4]}" if missing else ""
            raise OrderError(
                f"ranking must list each of the {len(expected)} letters exactly once{detail}"
            )

    @cached_property
    def rank(self) -> dict[Letter, int]:
        """Letter -> rank, 1-based; rank 1 is the smallest letter."""
        return {letter: j + 1 for j, letter in enumerate(self.letters)}

    def rank_of(self, letter: Letter) -> int:
        try:
            return self.rank[letter]
        except KeyError:
            raise OrderError(f"letter {letter} not in the (r={self.r}, n={self.n}) alphabet") from None

    def __str__(self):
        return " < ".join(format_letter(l, self.r) for l in self.letters)


def less(a: Letter, b: Letter, order: LinearOrder) -> bool:
    """True iff a ranks strictly below b."""
    return order.rank_of(a) < order.rank_of(b)


def _alphabet(r: int, n: int) -> list[Letter]:
    return [(v, c) for v in range(1, n + 1) for c in range(r)]


def _rlen_letters(r: int, n: int) -> tuple[Letter, ...]:
    colored = [(v, c) for v in range(n, 0, -1) for c in range(r - 1, 0, -1)]
    plain = [(v, 0) for v in range(1, n + 1)]
    return tuple(colored + plain)


@lru_cache(maxsize=None)
def build_order(
    name: str,
    r: int,
    n: int,
    seed: int | None = None,
    letters: tuple[Letter, ...] | None = None,
) -> LinearOrder:
    """Construct a named order; ``random`` needs a seed, ``explicit`` letters."""
    if name == "natural":
        if r == 2:
            neg = [(v, 1) for v in range(n, 0, -1)]
            pos = [(v, 0) for v in range(1, n + 1)]
            return LinearOrder(r, n, tuple(neg + pos))
        return LinearOrder(r, n, _rlen_letters(r, n))
    if name == "ar":
        if r > 2:
            raise OrderError("the ar order is defined on signed alphabets (r <= 2)")
        if r == 1:
            return LinearOrder(r, n, tuple((v, 0) for v in range(1, n + 1)))
        neg = [(v, 1) for v in range(1, n + 1)]
        pos = [(v, 0) for v in range(1, n + 1)]
        return LinearOrder(r, n, tuple(neg + pos))
    if name == "friends_desc":
        out = [(v, c) for v in range(1, n + 1) for c in range(r - 1, -1, -1)]
        return LinearOrder(r, n, tuple(out))
    if name == "friends_asc":
        out = [(v, c) for v in range(1, n + 1) for c in range(r)]
        return LinearOrder(r, n, tuple(out))
    if name == "rlen":
        return LinearOrder(r, n, _rlen_letters(r, n))
    if name == "random":
        if seed is None:
            raise OrderError("random orders require a seed")
        alpha = _alphabet(r, n)
        random.Random(seed).shuffle(alpha)
        return LinearOrder(r, n, tuple(alpha))
    if name == "explicit":
        if letters is None:
            raise OrderError("explicit orders require the full letter list")
        return LinearOrder(r, n, tuple(letters))
    raise OrderError(f"unknown order name {name!r}")


def order_from_spec(spec: str, r: int, n: int, default_seed: int | None = None) -> LinearOrder:
    """Parse a CLI order spec: name | random:<seed> | explicit:<letter list>."""
    spec = spec.strip()
    name = spec.replace("-", "_")
    if name in BUILTIN_ORDERS:
        return build_order(name, r, n)
    if name.startswith("random"):
        rest = name[len("random"):]
        if rest == "":
            if default_seed is None:
                raise OrderError("random order needs random:<seed> or --seed")
            return build_order("random", r, n, seed=default_seed)
        if not rest.startswith(":"):
            raise OrderError(f"bad order spec {spec!r}")
        try:
            seed = int(rest[1:])
        except ValueError:
            raise OrderError(f"bad random seed in {spec!r}") from None
        return build_order("random", r, n, seed=seed)
    if spec.startswith("explicit:"):
        letters = _parse_letter_list(spec[len("explicit:"):], r, n)
        return build_order("explicit", r, n, letters=letters)
    raise OrderError(f"unknown order spec {spec!r}")


def _parse_letter_list(body: str, r: int, n: int) -> tuple[Letter, ...]:
    """Letters smallest-first: signed decimals for r <= 2, ``v^c`` otherwise."""
    tokens = [t.strip() for t in body.split(",")] if body.strip() else []
    if len(tokens) != r * n:
        raise OrderError(f"explicit list has {len(tokens)} letters, alphabet has {r * n}")
    letters: list[Letter] = []
    for pos, tok in enumerate(tokens, start=1):
        if "^" in tok:
            head, _, tail = tok.partition("^")
            try:
                v, c = int(head), int(tail)
            except ValueError:
                raise OrderError(f"letter {pos}: malformed token {tok!r}") from None
        else:
            try:
                value = int(tok)
            except ValueError:
                raise OrderError(f"letter {pos}: malformed token {tok!r}") from None
            if value == 0:
                raise OrderError(f"letter {pos}: 0 is not a letter")
            v, c = abs(value), (1 if value < 0 else 0)
        if not (1 <= v <= n and 0 <= c < r):
            raise OrderError(f"letter {pos}: {tok!r} outside the (r={r}, n={n}) alphabet")
        letters.append((v, c))
    return tuple(letters)


def adjacent_swap(order: LinearOrder, j: int) -> LinearOrder:
    """Swap ranks j and j+1 (1-based); applying twice restores the order."""
    m = len(order.letters)
    if not 1 <= j <= m - 1:
        raise OrderError(f"swap index {j} outside 1..{m - 1}")
    letters = list(order.letters)
    letters[j - 1], letters[j] = letters[j], letters[j - 1]
    return LinearOrder(order.r, order.n, tuple(letters))


def psi(sigma: ColoredPermutation, order: LinearOrder, j: int) -> ColoredPermutation:
    """Swap the letters of ranks j, j+1 in sigma's window when both occur.

    Defined on B_n only.  When only one (or neither) of the two letters
    occurs, sigma is returned unchanged; in particular the swap of a letter
    with its own negative is always the identity.  psi is an involution and
    maps descent sets computed under ``order`` to descent sets computed under
    ``adjacent_swap(order, j)``.
    """
    if sigma.r != 2:
        raise DomainError("psi is defined on B_n (r=2) only")
    if order.r != sigma.r or order.n != sigma.n:
        from .errors import ShapeMismatch

        raise ShapeMismatch("order and element shapes differ")
    m = len(order.letters)
    if not 1 <= j <= m - 1:
        raise OrderError(f"index {j} outside 1..{m - 1}")
    a, b = order.letters[j - 1], order.letters[j]
    window = list(sigma.window())
    try:
        pa, pb = window.index(a), window.index(b)
    except ValueError:
        return sigma
    window[pa], window[pb] = window[pb], window[pa]
    pi = tuple(v for v, _ in window)
    z = tuple(c for _, c in window)
    return ColoredPermutation(sigma.n, sigma.r, pi, z)
