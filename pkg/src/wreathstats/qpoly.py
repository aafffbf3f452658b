"""Exact integer-coefficient polynomials in q and t, and q-analog builders.

BiPoly stores a sparse map from exponent pairs (a, b) to nonzero Python ints,
so coefficients can never overflow.  Exponents are nonnegative: every
statistic in scope is nonnegative and all closed forms expand to ordinary
polynomials.  Equality is structural on the canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NegativeN, UnknownFormula


@dataclass(frozen=True)
class Monomial:
    """A signed monomial c * q^a * t^b with c in {+1, -1}.

    Used as the substitution base of the q-bracket constructors, e.g.
    [n] with base -q, q^2, or q^2 t; the literal base -1 is Monomial(-1, 0, 0).
    """

    coef: int = 1
    q: int = 0
    t: int = 0

    def __post_init__(self):
        if self.coef not in (1, -1):
            raise ValueError("Monomial coefficient must be +1 or -1")
        if self.q < 0 or self.t < 0:
            raise ValueError("Monomial exponents must be nonnegative")

    def __pow__(self, k: int) -> "Monomial":
        if k < 0:
            raise ValueError("nonnegative powers only")
        return Monomial(self.coef if k % 2 else 1, self.q * k, self.t * k)

    def times(self, other: "Monomial") -> "Monomial":
        return Monomial(self.coef * other.coef, self.q + other.q, self.t + other.t)

    def neg(self) -> "Monomial":
        return Monomial(-self.coef, self.q, self.t)


Q = Monomial(1, 1, 0)
T = Monomial(1, 0, 1)
MINUS_ONE = Monomial(-1, 0, 0)


class BiPoly:
    """Sparse exact polynomial in q and t."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean: dict[tuple[int, int], int] = {}
        if terms:
            for (a, b), c in dict(terms).items():
                if c:
                    clean[(a, b)] = clean.get((a, b), 0) + c
                    if not clean[(a, b)]:
                        del clean[(a, b)]
        self._terms = clean

    # -- constructors

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({(0, 0): 1})

    @classmethod
    def const(cls, c: int) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def term(cls, c: int, a: int, b: int = 0) -> "BiPoly":
        return cls({(a, b): c})

    @classmethod
    def from_monomial(cls, m: Monomial) -> "BiPoly":
        return cls({(m.q, m.t): m.coef})

    # -- ring operations

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                v = out.get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                else:
                    del out[k]
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BiPoly":
        if k < 0:
            raise ValueError("nonnegative powers only")
        result = BiPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, (BiPoly, int)):
            return NotImplemented
        return self._terms == _coerce(other)._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    # -- inspection

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """(a, b, coefficient), ascending lexicographically by (a, b)."""
        return [(a, b, self._terms[(a, b)]) for a, b in sorted(self._terms)]

    def coefficient(self, a: int, b: int = 0) -> int:
        return self._terms.get((a, b), 0)

    def is_univariate_q(self) -> bool:
        return all(b == 0 for (_, b) in self._terms)

    def evaluate(self, q0, t0=1) -> Fraction:
        """Exact evaluation over the rationals."""
        q0, t0 = Fraction(q0), Fraction(t0)
        return sum(
            (Fraction(c) * q0**a * t0**b for (a, b), c in self._terms.items()),
            Fraction(0),
        )

    def substitute(self, q: Monomial | None = None, t: Monomial | None = None) -> "BiPoly":
        """Substitute signed monomials for the variables, e.g. q -> q^2."""
        qm = q if q is not None else Q
        tm = t if t is not None else T
        out: dict[tuple[int, int], int] = {}
        for (a, b), c in self._terms.items():
            m = (qm**a).times(tm**b)
            k = (m.q, m.t)
            v = out.get(k, 0) + c * m.coef
            if v:
                out[k] = v
            else:
                del out[k]
        return _raw(out)

    def __repr__(self):
        return f"BiPoly({self._terms!r})"

    def __str__(self):
        return format_poly(self)


def _coerce(x) -> BiPoly:
    if isinstance(x, BiPoly):
        return x
    if isinstance(x, int):
        return BiPoly.const(x)
    if isinstance(x, Monomial):
        return BiPoly.from_monomial(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to BiPoly")


def _raw(terms: dict[tuple[int, int], int]) -> BiPoly:
    p = BiPoly.__new__(BiPoly)
    p._terms = terms
    return p


# ---------------------------------------------------------------------------
# Rendering and serialization


def format_poly(p: BiPoly) -> str:
    """ASCII rendering: caret exponents, explicit + and - separators."""
    terms = p.sorted_terms()
    if not terms:
        return "0"
    pieces: list[str] = []
    for idx, (a, b, c) in enumerate(terms):
        factors = []
        if a:
            factors.append("q" if a == 1 else f"q^{a}")
        if b:
            factors.append("t" if b == 1 else f"t^{b}")
        mag = abs(c)
        if mag != 1 or not factors:
            factors.insert(0, str(mag))
        body = " ".join(factors)
        if idx == 0:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)


def poly_to_json(p: BiPoly) -> dict:
    return {"vars": ["q", "t"], "terms": [list(t) for t in p.sorted_terms()]}


def poly_from_json(obj: dict) -> BiPoly:
    return BiPoly({(a, b): c for a, b, c in obj["terms"]})


def poly_csv_rows(p: BiPoly) -> list[tuple[int, int, int]]:
    return p.sorted_terms()


# ---------------------------------------------------------------------------
# q-analog constructors


def q_bracket(n: int, x: Monomial = Q) -> BiPoly:
    """[n] with base x: 1 + x + ... + x^(n-1)."""
    if n < 0:
        raise NegativeN("q_bracket needs n >= 0")
    out = BiPoly.zero()
    for k in range(n):
        out = out + BiPoly.from_monomial(x**k)
    return out


def q_factorial(n: int, x: Monomial = Q) -> BiPoly:
    """[n]! with base x: [1]_x [2]_x ... [n]_x."""
    if n < 0:
        raise NegativeN("q_factorial needs n >= 0")
    out = BiPoly.one()
    for i in range(1, n + 1):
        out = out * q_bracket(i, x)
    return out


def pm_q_factorial(n: int, x: Monomial = Q) -> BiPoly:
    """Alternating-base factorial [1]_x [2]_{-x} [3]_x [4]_{-x} ..."""
    if n < 0:
        raise NegativeN("pm_q_factorial needs n >= 0")
    out = BiPoly.one()
    for i in range(1, n + 1):
        base = x if i % 2 == 1 else x.neg()
        out = out * q_bracket(i, base)
    return out


def pochhammer(a: Monomial, x: Monomial, n: int) -> BiPoly:
    """(a; x)_n = (1 - a)(1 - a x) ... (1 - a x^(n-1)); empty product is 1."""
    if n < 0:
        raise NegativeN("pochhammer needs n >= 0")
    out = BiPoly.one()
    for k in range(n):
        out = out * (BiPoly.one() - BiPoly.from_monomial(a.times(x**k)))
    return out


# ---------------------------------------------------------------------------
# Named closed forms


def _cf_qfactorial(n: int, r: int | None) -> BiPoly:
    return q_factorial(n)


def _cf_gs(n: int, r: int | None) -> BiPoly:
    return pm_q_factorial(n)


def _cf_poincare(n: int, r: int | None) -> BiPoly:
    out = BiPoly.one()
    for i in range(1, n + 1):
        out = out * q_bracket(2 * i)
    return out


def _cf_argsign(n: int, r: int | None) -> BiPoly:
    # [2]_{-q} [4]_q [6]_{-q} ... [2n]_{(-1)^n q}
    out = BiPoly.one()
    for i in range(1, n + 1):
        base = Q.neg() if i % 2 == 1 else Q
        out = out * q_bracket(2 * i, base)
    return out


def _cf_bsf(n: int, r: int | None) -> BiPoly:
    return pochhammer(Q, MINUS_ONE, n) * pm_q_factorial(n, Q**2)


def _cf_signmaj(n: int, r: int | None) -> BiPoly:
    return pochhammer(Q, Q.neg(), n) * pm_q_factorial(n, Q)


def _cf_fnmaj(n: int, r: int | None) -> BiPoly:
    out = q_factorial(n, Monomial(1, 2, 1))  # [n]! with base q^2 t
    for i in range(1, n + 1):
        out = out * (BiPoly.one() + BiPoly.term(1, 1, i))
    return out


def _cf_dsf(n: int, r: int | None) -> BiPoly:
    factor = (BiPoly.one() - BiPoly.term(1, 2, 0)) ** (n // 2)
    return factor * pm_q_factorial(n, Q**2)


def _cf_belmaj(n: int, r: int | None) -> BiPoly:
    if r is None:
        raise UnknownFormula("belmaj needs r")
    out = q_factorial(n)
    for i in range(1, n + 1):
        out = out * (BiPoly.one() + BiPoly.term(1, i, 0) * q_bracket(r - 1))
    return out


def _cf_rfmajprod(n: int, r: int | None) -> BiPoly:
    if r is None:
        raise UnknownFormula("rfmajprod needs r")
    out = BiPoly.one()
    for i in range(1, n + 1):
        out = out * q_bracket(r * i)
    return out


def _cf_csignfmaj(n: int, r: int | None) -> BiPoly:
    if r is None:
        raise UnknownFormula("csignfmaj needs r")
    return q_bracket(r, Q.neg()) ** n * pm_q_factorial(n, Q**r)


CLOSED_FORMS = {
    "qfactorial": _cf_qfactorial,
    "gs": _cf_gs,
    "poincare": _cf_poincare,
    "argsign": _cf_argsign,
    "bsf": _cf_bsf,
    "signmaj": _cf_signmaj,
    "fnmaj": _cf_fnmaj,
    "dsf": _cf_dsf,
    "belmaj": _cf_belmaj,
    "rfmajprod": _cf_rfmajprod,
    "csignfmaj": _cf_csignfmaj,
}


def closed_form(tag: str, n: int, r: int | None = None) -> BiPoly:
    """Expand a registered product formula exactly."""
    if n < 0:
        raise NegativeN("closed forms need n >= 0")
    try:
        fn = CLOSED_FORMS[tag]
    except KeyError:
        raise UnknownFormula(
            f"unknown formula {tag!r}; known: {', '.join(sorted(CLOSED_FORMS))}"
        ) from None
    return fn(n, r)
