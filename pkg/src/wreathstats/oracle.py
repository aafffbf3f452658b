"""Independent word-length oracles via breadth-first search on Cayley graphs.

The BFS is directed: states grow only by right-multiplication with the
generators themselves, never their inverses.  For involutive generating sets
this coincides with the undirected search; for the color generator s_0 of
G_{r,n} (order r) the direction is required by the minimal-word definition.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from . import stats
from .errors import BudgetExceeded, NotGenerated, ShapeInvalid
from .orders import build_order
from .perm import (
    ColoredPermutation,
    DEFAULT_STATE_BUDGET,
    GroupSpec,
    enumerate_group,
    gamma,
    group_order,
    letter_index,
)

GENERATOR_KINDS = ("sn_coxeter", "bn_coxeter", "grn_generators", "two_dim")


@dataclass(frozen=True)
class GeneratorSet:
    kind: str
    r: int
    n: int
    elements: tuple  # ColoredPermutation, or plain tuples for two_dim


def _adjacent_transposition(n: int, r: int, i: int) -> ColoredPermutation:
    pi = list(range(1, n + 1))
    pi[i - 1], pi[i] = pi[i], pi[i - 1]
    return ColoredPermutation(n, r, tuple(pi), (0,) * n)


def _color_generator(n: int, r: int) -> ColoredPermutation:
    return ColoredPermutation(n, r, tuple(range(1, n + 1)), (1,) + (0,) * (n - 1))


def _transposition(size: int, a: int, b: int) -> tuple[int, ...]:
    out = list(range(size))
    out[a], out[b] = out[b], out[a]
    return tuple(out)


def build_generators(kind: str, r: int, n: int) -> GeneratorSet:
    """Exact generator elements for each supported kind."""
    if n < 1 or r < 1:
        raise ShapeInvalid("generators need n >= 1 and r >= 1")
    if kind == "sn_coxeter":
        r = 1
        elems = tuple(_adjacent_transposition(n, 1, i) for i in range(1, n))
    elif kind == "bn_coxeter":
        r = 2
        elems = (_color_generator(n, 2),) + tuple(
            _adjacent_transposition(n, 2, i) for i in range(1, n)
        )
    elif kind == "grn_generators":
        elems = (_color_generator(n, r),) + tuple(
            _adjacent_transposition(n, r, i) for i in range(1, n)
        )
    elif kind == "two_dim":
        size = r * n
        rows = [
            _transposition(size, letter_index(i, j, r), letter_index(i, j + 1, r))
            for i in range(1, n + 1)
            for j in range(r - 1)
        ]
        cols = [
            _transposition(size, letter_index(i, j, r), letter_index(i + 1, j, r))
            for i in range(1, n)
            for j in range(r)
        ]
        elems = tuple(rows + cols)
    else:
        raise ShapeInvalid(f"unknown generator kind {kind!r}")
    return GeneratorSet(kind, r, n, elems)


def _window_action(gen: ColoredPermutation):
    """Right multiplication by a standard generator, acting on windows.

    Words are composed in the colored-function model, where the window lists
    the function's values: an adjacent transposition swaps two window entries
    (color travels with its value) and the color generator increments the
    color of the first entry.  This keeps the classical window-side length
    formulas literal: the distance of an element equals the formula evaluated
    on its own window.
    """
    n, r = gen.n, gen.r
    ident = tuple(range(1, n + 1))
    if gen.pi == ident and gen.z == (1,) + (0,) * (n - 1):
        def color_step(g: ColoredPermutation) -> ColoredPermutation:
            z = ((g.z[0] + 1) % r,) + g.z[1:]
            return ColoredPermutation(n, r, g.pi, z)

        return color_step
    if not any(gen.z):
        swapped = [i for i in range(n) if gen.pi[i] != i + 1]
        if len(swapped) == 2 and swapped[1] == swapped[0] + 1:
            i = swapped[0]

            def swap_step(g: ColoredPermutation) -> ColoredPermutation:
                pi = list(g.pi)
                z = list(g.z)
                pi[i], pi[i + 1] = pi[i + 1], pi[i]
                z[i], z[i + 1] = z[i + 1], z[i]
                return ColoredPermutation(n, r, tuple(pi), tuple(z))

            return swap_step
    raise ShapeInvalid(f"unsupported generator {gen!r}")


def _bfs_colored(
    start: ColoredPermutation, gens: tuple[ColoredPermutation, ...], budget: int
) -> dict[ColoredPermutation, int]:
    actions = [_window_action(s) for s in gens]
    dist = {start: 0}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        d = dist[x] + 1
        for act in actions:
            y = act(x)
            if y not in dist:
                if len(dist) >= budget:
                    raise BudgetExceeded(f"BFS exceeded budget of {budget} states")
                dist[y] = d
                queue.append(y)
    return dist


def _bfs_tuples(size: int, gens, budget: int) -> dict[tuple[int, ...], int]:
    start = tuple(range(size))
    dist = {start: 0}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        d = dist[x] + 1
        for s in gens:
            y = tuple(x[s[p]] for p in range(size))  # right multiplication
            if y not in dist:
                if len(dist) >= budget:
                    raise BudgetExceeded(f"BFS exceeded budget of {budget} states")
                dist[y] = d
                queue.append(y)
    return dist


def cayley_distances(
    gens: GeneratorSet,
    universe: GroupSpec | None = None,
    budget: int = DEFAULT_STATE_BUDGET,
) -> dict:
    """Exact minimal word length of every reachable element.

    When ``universe`` is given, every element of it must be reached; anything
    unreachable signals a generator-construction bug and raises NotGenerated.
    """
    if universe is not None and group_order(universe) > budget:
        raise BudgetExceeded(
            f"universe has {group_order(universe)} elements > budget {budget}"
        )
    if gens.kind == "two_dim":
        dist = _bfs_tuples(gens.r * gens.n, gens.elements, budget)
    else:
        start = ColoredPermutation.identity(gens.n, gens.r)
        dist = _bfs_colored(start, gens.elements, budget)
    if universe is not None:
        missing = [g for g in enumerate_group(universe, budget=None) if g not in dist]
        if missing:
            raise NotGenerated(
                f"{len(missing)} universe elements unreachable, e.g. {missing[0]}"
            )
    return dist


@lru_cache(maxsize=8)
def two_dim_distances(r: int, n: int, budget: int = DEFAULT_STATE_BUDGET):
    """Distance table of the full symmetric group on r*n letters under the
    row/column adjacent-swap generators.  Cached; the table is immutable."""
    import math

    if math.factorial(r * n) > budget:
        raise BudgetExceeded(
            f"S_{r * n} has {math.factorial(r * n)} elements > budget {budget}"
        )
    gens = build_generators("two_dim", r, n)
    return _bfs_tuples(r * n, gens.elements, budget)


def ell_d(g: ColoredPermutation, budget: int = DEFAULT_STATE_BUDGET) -> int:
    """BFS word length of the embedded permutation under the 2-d generators."""
    if g.n == 0:
        return 0
    table = two_dim_distances(g.r, g.n, budget)
    return table[gamma(g)]


def ell_d_certified(g: ColoredPermutation) -> tuple[int, list[tuple[int, ...]]]:
    """Constructive upper-bound witness for the 2-d word length, without BFS.

    Builds an explicit word of length r*inv(pi) + csum realizing the embedded
    permutation (column-sort phase then row-shift phase) and cross-checks that
    length against the cell-displacement count r*inv(pi) + (1/2) sum |x_ij - j|
    evaluated from the embedding.  Returns (length, word) with the word as a
    list of letter transpositions.

    Caution: the displacement count is NOT a valid lower bound on the word
    metric (rows swaps move letters between columns, so per-column inversion
    counting breaks mid-word); at (r, n) = (2, 4) some elements have strictly
    shorter words than this construction.  Agreement of the two numbers
    therefore certifies only the upper bound, not minimality.
    """
    r, n = g.r, g.n
    size = r * n
    target = gamma(g)
    word: list[tuple[int, ...]] = []
    state = list(range(size))

    def swap_cells(a: int, b: int) -> None:
        word.append(_transposition(size, a, b))
        state[a], state[b] = state[b], state[a]

    # Column phase: within every column, bubble the target's value pattern
    # (adjacent same-column swaps; inv(pi) swaps per column).
    for j in range(r):
        cells = [letter_index(i, j, r) for i in range(1, n + 1)]
        want = [target[letter_index(i, 0, r)] // r for i in range(1, n + 1)]
        # selection by repeated bubbling to keep every move adjacent
        for top in range(n):
            pos = next(k for k in range(top, n) if state[cells[k]] // r == want[top])
            for k in range(pos, top, -1):
                swap_cells(cells[k - 1], cells[k])
    # Row phase: walk the fully-colored letter of each row to column 0.
    for i in range(1, n + 1):
        zi = target[letter_index(i, 0, r)] % r
        for j in range(zi, 0, -1):
            swap_cells(letter_index(i, j - 1, r), letter_index(i, j, r))

    if tuple(state) != target:
        raise AssertionError("constructed word does not realize the embedding")

    pi = [target[letter_index(i, 0, r)] // r + 1 for i in range(1, n + 1)]
    inv_pi = sum(
        1 for a in range(n) for b in range(a + 1, n) if pi[a] > pi[b]
    )
    displacement = sum(
        abs(target[letter_index(i, j, r)] % r - j)
        for i in range(1, n + 1)
        for j in range(r)
    )
    lower = r * inv_pi + displacement // 2
    if len(word) != lower:
        raise AssertionError(
            f"certificate gap: word length {len(word)} vs lower bound {lower}"
        )
    return len(word), word


# ---------------------------------------------------------------------------
# Formula-vs-BFS comparison suites


def _friends_asc(r: int, n: int):
    return build_order("friends_asc", r, n)


def compare_lengths(kind: str, n: int, r: int | None = None,
                    budget: int = DEFAULT_STATE_BUDGET) -> list[dict]:
    """Per-element formula-vs-BFS rows for the CLI oracle command.

    Kinds: ``sn-length``, ``bn-length``, ``grn-length`` (word length in the
    standard generators) and ``elld`` (2-d generators vs flag inversion).
    """
    if kind == "sn-length":
        spec = GroupSpec("sn", n)
        dist = cayley_distances(build_generators("sn_coxeter", 1, n), spec, budget)
        formula = stats.length
    elif kind == "bn-length":
        spec = GroupSpec("bn", n)
        dist = cayley_distances(build_generators("bn_coxeter", 2, n), spec, budget)
        formula = stats.length
    elif kind == "grn-length":
        if r is None:
            raise ShapeInvalid("grn-length needs r")
        spec = GroupSpec("grn", n, r)
        dist = cayley_distances(build_generators("grn_generators", r, n), spec, budget)
        formula = stats.length
    elif kind == "elld":
        if r is None:
            r = 2
        spec = GroupSpec("grn", n, r)
        table = two_dim_distances(r, n, budget)
        order = _friends_asc(r, n)
        rows = []
        for g in enumerate_group(spec, budget):
            f = stats.finv(g, order)
            b = table[gamma(g)]
            rows.append({"element": g, "formula": f, "bfs": b, "match": f == b})
        return rows
    else:
        raise ShapeInvalid(f"unknown oracle kind {kind!r}")
    rows = []
    for g in enumerate_group(spec, budget):
        f = formula(g)
        b = dist[g]
        rows.append({"element": g, "formula": f, "bfs": b, "match": f == b})
    return rows
