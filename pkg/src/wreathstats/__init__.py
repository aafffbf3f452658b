"""Exact permutation statistics on colored permutation groups.

The package enumerates the symmetric, signed and r-colored permutation
groups, evaluates their classical statistics under configurable linear
orders, builds exact integer-coefficient generating polynomials, and
verifies a registry of equidistribution and product-formula identities by
exhaustive enumeration cross-checked against independent BFS word-length
oracles.
"""

from .errors import (
    BudgetExceeded,
    ColorOutOfRange,
    DomainError,
    Error,
    MissingOrder,
    NotABijection,
    NotGenerated,
    OrderError,
    ParseError,
    ShapeInvalid,
    ShapeMismatch,
    UnknownFormula,
    UnknownIdentity,
)
from .identities import (
    GenFunSpec,
    IdentityRecord,
    Report,
    StatSpec,
    genfun,
    lookup,
    registry,
    verify,
    verify_all,
)
from .orders import LinearOrder, adjacent_swap, build_order, less, order_from_spec, psi
from .perm import (
    ColoredPermutation,
    GroupSpec,
    bar,
    enumerate_group,
    format_element,
    gamma,
    group_order,
    inverse,
    make,
    parse_element,
    phi,
    product,
    tau_pi_decompose,
    window_compose,
    xi,
)
from .qpoly import (
    BiPoly,
    Monomial,
    closed_form,
    format_poly,
    pm_q_factorial,
    pochhammer,
    q_bracket,
    q_factorial,
)

__version__ = "0.1.0"
