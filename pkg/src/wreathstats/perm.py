"""Colored permutations and the groups built from them.

An element of the colored permutation group G_{r,n} (the wreath product of a
cyclic group of order r with the symmetric group S_n) is a pair (z, pi):
``pi`` is one-line notation (a bijection of 1..n) and ``z`` assigns a color
in 0..r-1 to every position.  Position ``i`` of the window shows the letter
``(pi[i], z[i])``; for r = 2 the letter (v, 1) is displayed as -v, which
identifies G_{2,n} with the signed permutation (hyperoctahedral) group B_n,
and r = 1 is plain S_n.

The group law is the wreath-product law

    (z, pi) * (z', pi') = ((z_i + z'_{pi^-1(i)})_i mod r, pi o pi')

with composition (pi o pi')(i) = pi(pi'(i)).
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from typing import Iterator

from .errors import (
    BudgetExceeded,
    ColorOutOfRange,
    DomainError,
    NotABijection,
    ParseError,
    ShapeInvalid,
)

Letter = tuple[int, int]  # (value, color)

FAMILIES = ("sn", "bn", "dn", "grn", "un", "udn", "colorn", "colorni")

#: Families whose color count is forced.
_FORCED_R = {"sn": 1, "bn": 2, "dn": 2, "un": 2, "udn": 2}

DEFAULT_STATE_BUDGET = 50_000


@dataclass(frozen=True)
class ColoredPermutation:
    """An element (z, pi) of G_{r,n}, validated on construction."""

    n: int
    r: int
    pi: tuple[int, ...]
    z: tuple[int, ...]

    def __post_init__(self):
        if self.r < 1 or self.n < 0:
            raise ShapeInvalid(f"need r >= 1 and n >= 0, got r={self.r}, n={self.n}")
        object.__setattr__(self, "pi", tuple(self.pi))
        object.__setattr__(self, "z", tuple(self.z))
        if len(self.pi) != self.n or len(self.z) != self.n:
            raise ShapeInvalid(
                f"pi and z must have length n={self.n}, got {len(self.pi)} and {len(self.z)}"
            )
        if sorted(self.pi) != list(range(1, self.n + 1)):
            raise NotABijection(f"{self.pi} is not a permutation of 1..{self.n}")
        for i, c in enumerate(self.z):
            if not 0 <= c < self.r:
                raise ColorOutOfRange(f"z[{i}] = {c} not in 0..{self.r - 1}")

    @classmethod
    def identity(cls, n: int, r: int) -> "ColoredPermutation":
        return cls(n, r, tuple(range(1, n + 1)), (0,) * n)

    @classmethod
    def from_window(cls, values, r: int = 2) -> "ColoredPermutation":
        """Build from a signed window (r <= 2); negative entries mean color 1."""
        values = tuple(values)
        pi = tuple(abs(v) for v in values)
        z = tuple(1 if v < 0 else 0 for v in values)
        return cls(len(values), r, pi, z)

    def window(self) -> tuple[Letter, ...]:
        """The letter (value, color) shown at each position."""
        return tuple(zip(self.pi, self.z))

    def signed_window(self) -> tuple[int, ...]:
        """Window as signed integers; defined for r <= 2."""
        if self.r > 2:
            raise DomainError(f"signed window needs r <= 2, got r={self.r}")
        return tuple(-v if c else v for v, c in zip(self.pi, self.z))

    def is_identity(self) -> bool:
        return self.pi == tuple(range(1, self.n + 1)) and not any(self.z)

    def pi_inverse(self) -> tuple[int, ...]:
        inv = [0] * self.n
        for i, v in enumerate(self.pi):
            inv[v - 1] = i + 1
        return tuple(inv)

    def mul(self, other: "ColoredPermutation") -> "ColoredPermutation":
        """Group product; see the module docstring for the law."""
        if self.n != other.n or self.r != other.r:
            from .errors import ShapeMismatch

            raise ShapeMismatch(
                f"cannot multiply shapes (r={self.r},n={self.n}) and (r={other.r},n={other.n})"
            )
        ainv = self.pi_inverse()
        z = tuple((self.z[i] + other.z[ainv[i] - 1]) % self.r for i in range(self.n))
        pi = tuple(self.pi[other.pi[i] - 1] for i in range(self.n))
        return ColoredPermutation(self.n, self.r, pi, z)

    def inverse(self) -> "ColoredPermutation":
        """Group inverse: pi^-1 with colors z_j = -z_{pi(j)} mod r."""
        pinv = self.pi_inverse()
        z = tuple((-self.z[self.pi[j] - 1]) % self.r for j in range(self.n))
        return ColoredPermutation(self.n, self.r, pinv, z)

    def bar(self) -> "ColoredPermutation":
        """(z, pi) -> (z, pi^-1): same colors, inverted permutation."""
        return ColoredPermutation(self.n, self.r, self.pi_inverse(), self.z)

    def __mul__(self, other):
        return self.mul(other)

    def __invert__(self):
        return self.inverse()

    def __repr__(self):
        return f"ColoredPermutation(n={self.n}, r={self.r}, pi={self.pi}, z={self.z})"

    def __str__(self):
        return format_element(self)


def make(n: int, r: int, pi, z) -> ColoredPermutation:
    """Validated constructor for an element of G_{r,n}."""
    return ColoredPermutation(n, r, tuple(pi), tuple(z))


def product(a: ColoredPermutation, b: ColoredPermutation) -> ColoredPermutation:
    return a.mul(b)


def inverse(g: ColoredPermutation) -> ColoredPermutation:
    return g.inverse()


def bar(g: ColoredPermutation) -> ColoredPermutation:
    return g.bar()


@dataclass(frozen=True)
class GroupSpec:
    """Which group (or structured subset) to enumerate."""

    family: str
    n: int
    r: int = 0
    i: int | None = None  # color index, colorni only

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ShapeInvalid(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        forced = _FORCED_R.get(self.family)
        if forced is not None:
            if self.r not in (0, forced):
                raise ShapeInvalid(f"family {self.family} forces r={forced}, got r={self.r}")
            object.__setattr__(self, "r", forced)
        elif self.r < 1:
            raise ShapeInvalid(f"family {self.family} needs an explicit r >= 1")
        if self.n < 0:
            raise ShapeInvalid("n must be >= 0")
        if self.family == "colorni":
            if self.n < 1:
                raise ShapeInvalid("colorni needs n >= 1")
            if self.i is None or not 0 <= self.i < self.r:
                raise ShapeInvalid(f"colorni needs a color index i in 0..{self.r - 1}")


def group_order(spec: GroupSpec) -> int:
    """Exact cardinality of the enumeration of ``spec``."""
    n, r = spec.n, spec.r
    fact = math.factorial(n)
    if spec.family == "sn":
        return fact
    if spec.family == "bn":
        return 2**n * fact
    if spec.family == "dn":
        return 1 if n == 0 else 2 ** (n - 1) * fact
    if spec.family == "grn":
        return r**n * fact
    if spec.family == "un":
        return 2**n
    if spec.family == "udn":
        return 1 if n == 0 else 2 ** (n - 1)
    if spec.family == "colorn":
        return r**n
    if spec.family == "colorni":
        return r ** (n - 1)
    raise ShapeInvalid(spec.family)


def _iter_colored(n: int, r: int) -> Iterator[ColoredPermutation]:
    # Lexicographic on the concatenated tuple (z, pi).
    for z in itertools.product(range(r), repeat=n):
        for pi in itertools.permutations(range(1, n + 1)):
            yield ColoredPermutation(n, r, pi, z)


def _iter_un(n: int) -> Iterator[ColoredPermutation]:
    elems = []
    for signs in itertools.product((1, -1), repeat=n):
        window = sorted(s * v for s, v in zip(signs, range(1, n + 1)))
        elems.append(ColoredPermutation.from_window(window))
    elems.sort(key=lambda g: (g.z, g.pi))
    return iter(elems)


def enumerate_group(
    spec: GroupSpec, budget: int | None = DEFAULT_STATE_BUDGET
) -> Iterator[ColoredPermutation]:
    """Yield each member exactly once, lexicographically on (z, pi)."""
    size = group_order(spec)
    if budget is not None and size > budget:
        raise BudgetExceeded(f"{spec.family} with n={spec.n}, r={spec.r} has {size} elements > budget {budget}")
    n, r = spec.n, spec.r
    if spec.family in ("sn", "bn", "grn"):
        return _iter_colored(n, r)
    if spec.family == "dn":
        return (g for g in _iter_colored(n, 2) if sum(1 for c in g.z if c) % 2 == 0)
    if spec.family == "un":
        return _iter_un(n)
    if spec.family == "udn":
        return (g for g in _iter_un(n) if sum(1 for c in g.z if c) % 2 == 0)
    if spec.family == "colorn":
        ident = tuple(range(1, n + 1))
        return (
            ColoredPermutation(n, r, ident, z) for z in itertools.product(range(r), repeat=n)
        )
    if spec.family == "colorni":
        ident = tuple(range(1, n + 1))
        return (
            ColoredPermutation(n, r, ident, z + (spec.i,))
            for z in itertools.product(range(r), repeat=n - 1)
        )
    raise ShapeInvalid(spec.family)


# ---------------------------------------------------------------------------
# Structural maps


def window_compose(tau: ColoredPermutation, pi: tuple[int, ...]) -> ColoredPermutation:
    """Compose as functions: the result's window at i is tau's window at pi(i)."""
    new_pi = tuple(tau.pi[pi[i] - 1] for i in range(tau.n))
    new_z = tuple(tau.z[pi[i] - 1] for i in range(tau.n))
    return ColoredPermutation(tau.n, tau.r, new_pi, new_z)


def is_increasing_window(g: ColoredPermutation) -> bool:
    w = g.signed_window()
    return all(w[i] < w[i + 1] for i in range(len(w) - 1))


def tau_pi_decompose(
    sigma: ColoredPermutation,
) -> tuple[ColoredPermutation, ColoredPermutation]:
    """Unique factorization sigma = tau o pi with tau increasing, pi plain.

    tau is the increasing rearrangement of sigma's signed window and pi is the
    permutation placing it back: window(sigma)[i] = window(tau)[pi(i)].  Both
    parts are returned as elements of B_n (pi carries no colors).
    """
    if sigma.r != 2:
        raise DomainError("tau/pi factorization is defined on B_n (r=2)")
    w = sigma.signed_window()
    sorted_w = sorted(w)
    rank = {v: i + 1 for i, v in enumerate(sorted_w)}
    tau = ColoredPermutation.from_window(sorted_w)
    pi = tuple(rank[v] for v in w)
    return tau, ColoredPermutation(sigma.n, 2, pi, (0,) * sigma.n)


def phi(tau: ColoredPermutation, which: int) -> ColoredPermutation:
    """Grow an increasing window: which=1 prepends -(n'+1), which=2 appends n'+1."""
    if tau.r != 2:
        raise DomainError("phi acts on increasing signed windows (r=2)")
    if not is_increasing_window(tau):
        raise DomainError(f"window {tau.signed_window()} is not strictly increasing")
    if which not in (1, 2):
        raise DomainError("which must be 1 or 2")
    n = tau.n + 1
    w = tau.signed_window()
    if which == 1:
        return ColoredPermutation.from_window((-n,) + w)
    return ColoredPermutation.from_window(w + (n,))


def xi(c: ColoredPermutation, j: int) -> ColoredPermutation:
    """Extend a color vector (identity permutation) by one position of color j."""
    if c.pi != tuple(range(1, c.n + 1)):
        raise DomainError("xi acts on color vectors, i.e. elements with identity pi")
    if not 0 <= j < c.r:
        raise ColorOutOfRange(f"color {j} not in 0..{c.r - 1}")
    n = c.n + 1
    return ColoredPermutation(n, c.r, tuple(range(1, n + 1)), c.z + (j,))


def letter_index(v: int, c: int, r: int) -> int:
    """Linearize letter (v, c) into 0..r*n-1, value-major."""
    return (v - 1) * r + c


def index_letter(p: int, r: int) -> Letter:
    return p // r + 1, p % r


def gamma(g: ColoredPermutation) -> tuple[int, ...]:
    """Embed g into the plain symmetric group on the r*n colored letters.

    Returns one-line notation over linearized letter indices: entry at the
    index of letter (i, k) is the index of the image letter, defined case-wise
    on k relative to z_i (k=0 picks up the full color z_i, colors 1..z_i shift
    down by one, colors above z_i are fixed).
    """
    n, r = g.n, g.r
    out = [0] * (n * r)
    for i in range(1, n + 1):
        zi = g.z[i - 1]
        v = g.pi[i - 1]
        for k in range(r):
            if k == 0:
                image = (v, zi)
            elif k <= zi:
                image = (v, k - 1)
            else:
                image = (v, k)
            out[letter_index(i, k, r)] = letter_index(*image, r)
    return tuple(out)


# ---------------------------------------------------------------------------
# Text format

_CARET_TOKEN = re.compile(r"^(\d+)\^(\d+)$")
_SIGNED_TOKEN = re.compile(r"^-?\d+$")


def format_letter(letter: Letter, r: int) -> str:
    v, c = letter
    if r <= 2:
        return str(-v if c else v)
    return f"{v}^{c}"


def format_element(g: ColoredPermutation, style: str | None = None) -> str:
    """One-line window text: plain for S_n, signed for B_n, ``v^c`` otherwise."""
    if style is None:
        style = "plain" if g.r == 1 else ("signed" if g.r == 2 else "caret")
    if style == "plain":
        return ",".join(str(v) for v in g.pi)
    if style == "signed":
        return ",".join(str(v) for v in g.signed_window())
    return ",".join(f"{v}^{c}" for v, c in g.window())


def parse_element(text: str, r: int) -> ColoredPermutation:
    """Parse window text; malformed tokens raise ParseError with their position."""
    text = text.strip()
    tokens = [] if text == "" else [t.strip() for t in text.split(",")]
    n = len(tokens)
    pi: list[int] = []
    z: list[int] = []
    caret = any("^" in t for t in tokens)
    for pos, tok in enumerate(tokens, start=1):
        if caret:
            m = _CARET_TOKEN.match(tok)
            if not m:
                raise ParseError(f"expected value^color, got {tok!r}", pos)
            v, c = int(m.group(1)), int(m.group(2))
        else:
            if not _SIGNED_TOKEN.match(tok):
                raise ParseError(f"expected a (signed) integer, got {tok!r}", pos)
            value = int(tok)
            if value == 0:
                raise ParseError("0 is not a window value", pos)
            v, c = abs(value), (1 if value < 0 else 0)
        if not 1 <= v <= n:
            raise ParseError(f"value {v} outside 1..{n}", pos)
        if not 0 <= c < r:
            raise ParseError(f"color {c} outside 0..{r - 1}", pos)
        pi.append(v)
        z.append(c)
    seen: set[int] = set()
    for pos, v in enumerate(pi, start=1):
        if v in seen:
            raise ParseError(f"value {v} repeated", pos)
        seen.add(v)
    return ColoredPermutation(n, r, tuple(pi), tuple(z))
