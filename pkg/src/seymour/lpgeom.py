"""Exact-rational linear programming over the fundamental polytope.

The fundamental polytope of a list H of dual words is the intersection of
the single-parity-check polytopes of those words inside the unit cube: for
each h with support S, one row per odd-cardinality J within S,

    sum_{j in J} x_j  -  sum_{i in S-J} x_i  <=  |J| - 1.

Linear minimization over the polytope relaxes ML decoding.  When H spans
the dual code, the integral vertices are exactly the codewords, so an
integral optimum certifies the ML codeword and a fractional optimum is a
pseudocodeword.  Integral-versus-fractional is the entire point, so the
solver runs on exact rationals end to end: a dense tableau simplex with
Bland's anti-cycling rule, no floats anywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .codes import LinearCode
from .errors import ContractError, InputBoundError

DEFAULT_ROW_BUDGET = 10**6

Row = tuple[tuple[Fraction, ...], Fraction]  # coefficients, rhs; sense is <=


@dataclass(frozen=True)
class PolytopeLP:
    """A list of <=-rows over n box-bounded variables."""

    n: int
    rows: tuple[Row, ...]


@dataclass(frozen=True)
class LPVertex:
    """An optimal basic feasible solution in exact rationals."""

    x: tuple[Fraction, ...]
    integral: bool
    objective: Fraction


def build_fundamental_polytope(
    dual_words: Sequence[Sequence[int]] | Sequence[int],
    n: int,
    row_budget: int = DEFAULT_ROW_BUDGET,
) -> PolytopeLP:
    """Odd-subset rows for every dual word plus the 2n box rows.

    ``dual_words`` may be bit masks or 0/1 sequences.  Each word of
    support size s contributes 2^(s-1) rows; identical rows are emitted
    once.  The total row count is refused beyond ``row_budget``.
    """
    supports = []
    for h in dual_words:
        support = _support(h, n)
        if not support:
            raise ContractError("dual words must be nonzero")
        supports.append(support)
    total = sum(1 << (len(s) - 1) for s in supports)
    if total > row_budget:
        raise InputBoundError(
            f"odd-subset expansion needs {total} rows, over the budget of {row_budget}"
        )

    zero = Fraction(0)
    one = Fraction(1)
    rows: list[Row] = []
    seen: set[Row] = set()

    def add(coeffs: tuple[Fraction, ...], rhs: Fraction) -> None:
        row = (coeffs, rhs)
        if row not in seen:
            seen.add(row)
            rows.append(row)

    for support in supports:
        for odd_size in range(1, len(support) + 1, 2):
            for odd_subset in combinations(support, odd_size):
                coeffs = [zero] * n
                odd = set(odd_subset)
                for j in support:
                    coeffs[j - 1] = one if j in odd else -one
                add(tuple(coeffs), Fraction(odd_size - 1))
    for j in range(n):
        coeffs = [zero] * n
        coeffs[j] = one
        add(tuple(coeffs), one)  # x_j <= 1
        coeffs = [zero] * n
        coeffs[j] = -one
        add(tuple(coeffs), zero)  # -x_j <= 0
    return PolytopeLP(n, tuple(rows))


def _support(word: Sequence[int] | int, n: int) -> tuple[int, ...]:
    if isinstance(word, int):
        return tuple(j + 1 for j in range(n) if (word >> j) & 1)
    if len(word) != n:
        raise ContractError("dual word length differs from n")
    return tuple(j + 1 for j, b in enumerate(word) if b)


def lp_minimize(p: PolytopeLP, gamma: Sequence[Fraction | int]) -> LPVertex:
    """Minimize <gamma, x> over the polytope by primal simplex.

    Variables are structurally nonnegative (their lower box rows are
    implied), every rhs is nonnegative, so the slack basis starts
    feasible.  Bland's rule picks the lowest-index entering and leaving
    variables, which guarantees termination.  The returned vertex is
    re-checked against every row in exact arithmetic.
    """
    n = p.n
    if len(gamma) != n:
        raise ContractError("cost vector length differs from variable count")
    cost = [Fraction(g) for g in gamma]
    zero = Fraction(0)

    # tableau rows: structural rows only (skip the -x_j <= 0 box rows)
    body: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for coeffs, b in p.rows:
        if _is_lower_box_row(coeffs):
            continue
        body.append(list(coeffs))
        rhs.append(b)
        assert b >= 0
    m = len(body)
    one = Fraction(1)
    # columns: n structural + m slacks
    for i, row in enumerate(body):
        row.extend(one if j == i else zero for j in range(m))
    basis = list(range(n, n + m))
    z = list(cost) + [zero] * m  # reduced costs of the slack basis

    while True:
        enter = next((j for j in range(n + m) if z[j] < 0), None)
        if enter is None:
            break
        ratio: Fraction | None = None
        leave = -1
        for i in range(m):
            a = body[i][enter]
            if a > 0:
                r = rhs[i] / a
                if ratio is None or r < ratio or (r == ratio and basis[i] < basis[leave]):
                    ratio = r
                    leave = i
        if leave < 0:
            raise AssertionError("unbounded LP over a bounded polytope")
        _pivot(body, rhs, z, leave, enter)
        basis[leave] = enter

    x = [zero] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = rhs[i]
    objective = sum((cost[j] * x[j] for j in range(n)), zero)
    vertex = LPVertex(tuple(x), all(v.denominator == 1 for v in x), objective)
    _check_feasible(p, vertex.x)
    return vertex


def _is_lower_box_row(coeffs: tuple[Fraction, ...]) -> bool:
    nonzero = [c for c in coeffs if c != 0]
    return len(nonzero) == 1 and nonzero[0] == -1


def _pivot(body: list[list[Fraction]], rhs: list[Fraction], z: list[Fraction], r: int, c: int) -> None:
    prow = body[r]
    pivot = prow[c]
    inv = 1 / pivot
    for j in range(len(prow)):
        if prow[j]:
            prow[j] *= inv
    rhs[r] *= inv
    for i, row in enumerate(body):
        if i == r:
            continue
        factor = row[c]
        if factor:
            for j in range(len(prow)):
                if prow[j]:
                    row[j] -= factor * prow[j]
            rhs[i] -= factor * rhs[r]
    factor = z[c]
    if factor:
        for j in range(len(prow)):
            if prow[j]:
                z[j] -= factor * prow[j]


def _check_feasible(p: PolytopeLP, x: Sequence[Fraction]) -> None:
    for coeffs, b in p.rows:
        total = sum((c * v for c, v in zip(coeffs, x) if c), Fraction(0))
        if total > b:
            raise AssertionError("simplex returned an infeasible point")


def _check_dual_words(c: LinearCode, dual_words: Sequence[int]) -> None:
    for h in dual_words:
        if not c.dual().contains_mask(h):
            raise ContractError("a listed word is not in the dual code")
    from .gf2 import rank

    if rank(list(dual_words)) != c.n - c.k:
        raise ContractError("the listed dual words do not span the dual code")


def _as_masks(dual_words: Sequence[Sequence[int]] | Sequence[int], n: int) -> list[int]:
    masks = []
    for h in dual_words:
        if isinstance(h, int):
            masks.append(h)
        else:
            m = 0
            for j, b in enumerate(h):
                if b:
                    m |= 1 << j
            masks.append(m)
    return masks


def full_dual_words(c: LinearCode) -> list[int]:
    """All nonzero words of the dual code, as masks."""
    return sorted(w for w in c.dual().words() if w)


def lp_decode(
    c: LinearCode,
    dual_words: Sequence[Sequence[int]] | Sequence[int],
    gamma: Sequence[Fraction | int],
    polytope: PolytopeLP | None = None,
) -> tuple[LPVertex, str]:
    """LP relaxation decoding with the ML certificate.

    Requires the listed words to lie in and span the dual code, so the
    polytope's integral vertices are exactly the codewords.  The verdict
    is "ml_codeword" when the optimum is integral (then it is the ML
    codeword) and "pseudocodeword" otherwise.
    """
    masks = _as_masks(dual_words, c.n)
    _check_dual_words(c, masks)
    p = polytope if polytope is not None else build_fundamental_polytope(masks, c.n)
    vertex = lp_minimize(p, gamma)
    if vertex.integral:
        word = sum(1 << j for j in range(c.n) if vertex.x[j] == 1)
        assert c.contains_mask(word), "integral vertex outside the code"
        return vertex, "ml_codeword"
    return vertex, "pseudocodeword"


@dataclass(frozen=True)
class HuntResult:
    """First fractional optimum found, with its provenance."""

    trial: int
    gamma: tuple[Fraction, ...]
    vertex: LPVertex


def hunt_pseudocodeword(
    c: LinearCode,
    dual_words: Sequence[Sequence[int]] | Sequence[int],
    trials: int,
    seed: int,
) -> HuntResult | None:
    """Probe the polytope with seeded random small-rational costs.

    Returns the first trial whose LP optimum is fractional; None after
    ``trials`` integral optima.  A None is evidence, not a proof of
    absence; certified absence comes from the geometric-perfection
    classifier.
    """
    masks = _as_masks(dual_words, c.n)
    _check_dual_words(c, masks)
    p = build_fundamental_polytope(masks, c.n)
    rng = random.Random(seed)
    for trial in range(trials):
        gamma = _hunt_gamma(rng, c.n)
        vertex = lp_minimize(p, gamma)
        if not vertex.integral:
            return HuntResult(trial, gamma, vertex)
    return None


def _hunt_gamma(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    """Small-rational cost vector: per-coordinate noise around a per-trial
    shift.  The shift makes balanced same-sign directions, where fractional
    vertices tend to be exposed, a constant fraction of the draws."""
    shift = Fraction(rng.randint(-8, 8), 4)
    return tuple(
        shift + Fraction(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(n)
    )
