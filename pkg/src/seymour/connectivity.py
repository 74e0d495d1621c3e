"""Separations, connectivity, and the state-complexity profile.

A partition (J, Jc) of the coordinate set is a k-separation when both
sides have at least k coordinates and the separation defect
dim(C|J) + dim(C|Jc) - dim(C) is at most k-1.  The defect is invariant
under dualization, which makes every result here dual-symmetric.

Searches are exhaustive over coordinate subsets with a precomputed
rank-per-subset table; the paper-grade polynomial algorithms are out of
scope at desk scale.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .codes import LinearCode
from .errors import ContractError, InputBoundError
from .gf2 import column_masks, subset_rank_table

DEFAULT_SEARCH_BOUND = 20


@dataclass(frozen=True)
class Separation:
    """A k-separation witness (J, Jc) with its order and flags."""

    J: tuple[int, ...]
    k: int
    exact: bool
    minimal: bool


@dataclass(frozen=True)
class StateProfile:
    """Defect of every prefix split; s[0] = s[n] = 0."""

    s: tuple[int, ...]

    @property
    def s_max(self) -> int:
        return max(self.s)


def defect(c: LinearCode, coords: Iterable[int]) -> int:
    """dim(C|J) + dim(C|Jc) - dim(C); nonnegative for every J."""
    j = set(coords)
    jc = [x for x in range(1, c.n + 1) if x not in j]
    d = c.restriction_dim(j) + c.restriction_dim(jc) - c.k
    assert d >= 0
    return d


def state_profile(c: LinearCode) -> StateProfile:
    values = [0]
    for i in range(1, c.n + 1):
        values.append(
            c.restriction_dim(range(1, i + 1))
            + c.restriction_dim(range(i + 1, c.n + 1))
            - c.k
        )
    return StateProfile(tuple(values))


@functools.lru_cache(maxsize=32)
def _rank_table(c: LinearCode) -> bytearray:
    cols = column_masks(c.gen.rows, c.n)
    return subset_rank_table(cols)


def _mask_defect(c: LinearCode, table: bytearray, mask: int) -> int:
    full = (1 << c.n) - 1
    return table[mask] + table[full & ~mask] - c.k


def find_k_separation(
    c: LinearCode, k: int, min_side: int, bound: int = DEFAULT_SEARCH_BOUND
) -> Separation | None:
    """Find a k-separation with both sides of size at least ``min_side``.

    Returns the deterministic witness: the qualifying J of smallest size,
    lexicographically least on ties, always presented as the smaller side.
    None means no such separation exists.
    """
    if not 1 <= k <= min_side:
        raise ContractError("need min_side >= k >= 1")
    if c.n > bound:
        raise InputBoundError(
            f"exhaustive separation search limited to n <= {bound}; "
            "shorten the code or raise the bound explicitly"
        )
    if c.n < 2 * min_side:
        return None

    if k == 1 and min_side == 1:
        witness = _one_separation_fast(c)
        if witness is not None:
            return Separation(witness, 1, defect(c, witness) == 0, len(witness) == 1)
        return None

    table = _rank_table(c)
    for size in range(min_side, c.n // 2 + 1):
        for subset in combinations(range(1, c.n + 1), size):
            mask = 0
            for j in subset:
                mask |= 1 << (j - 1)
            d = _mask_defect(c, table, mask)
            if d <= k - 1:
                return Separation(
                    subset,
                    k,
                    exact=(d == k - 1),
                    minimal=(min(size, c.n - size) == k),
                )
    return None


def _one_separation_fast(c: LinearCode) -> tuple[int, ...] | None:
    """Smallest-then-lex 1-separation side via the bipartite row/column
    incidence graph of the rref basis: the code splits exactly along its
    connected components (all-zero columns are singleton components)."""
    if c.n < 2:
        return None
    parent = list(range(c.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for row in c.gen.rows:
        first = None
        r = row
        while r:
            j = (r & -r).bit_length() - 1
            r &= r - 1
            if first is None:
                first = j
            else:
                ra, rb = find(first), find(j)
                if ra != rb:
                    parent[ra] = rb
    comps: dict[int, list[int]] = {}
    for j in range(c.n):
        comps.setdefault(find(j), []).append(j)
    if len(comps) <= 1:
        return None
    groups = sorted(
        (sorted(x + 1 for x in grp) for grp in comps.values()),
        key=lambda g: (len(g), g),
    )
    return tuple(groups[0])


def connectivity_lambda(
    c: LinearCode, bound: int = DEFAULT_SEARCH_BOUND
) -> int | float:
    """The least k admitting a k-separation; math.inf when none exists.

    Invariant under dualization.
    """
    if c.n > bound:
        raise InputBoundError(f"exhaustive connectivity limited to n <= {bound}")
    if c.n < 2:
        return math.inf
    table = _rank_table(c)
    best: int | float = math.inf
    full = (1 << c.n) - 1
    for mask in range(1, full):
        size = mask.bit_count()
        side = min(size, c.n - size)
        d = table[mask] + table[full & ~mask] - c.k
        if d + 1 <= side and d + 1 < best:
            best = d + 1
            if best == 1:
                break
    return best


def is_k_connected(c: LinearCode, k: int, bound: int = DEFAULT_SEARCH_BOUND) -> bool:
    """No k'-separation for any k' < k (defined for k >= 2)."""
    if k < 2:
        raise ContractError("k-connectedness starts at k = 2")
    lam = connectivity_lambda(c, bound=bound)
    return lam >= k


def is_internally_4connected(c: LinearCode, bound: int = DEFAULT_SEARCH_BOUND) -> bool:
    """True when every 3-separation of a 3-connected code is minimal,
    i.e. no 3-separation has both sides of size 4 or more."""
    if not is_k_connected(c, 3, bound=bound):
        raise ContractError("internal 4-connectedness is defined for 3-connected codes")
    return find_k_separation(c, 3, 4, bound=bound) is None


def minor_split(
    c: LinearCode, E1: Iterable[int], E2: Iterable[int]
) -> tuple[LinearCode, LinearCode]:
    """The two minors used by the separation-search reduction.

    For disjoint E1, E2 this returns (C/E2\\E1, C/E1\\E2), both of length
    n - |E1 u E2| with the surviving coordinates renumbered in ascending
    order.  The rank identity relating their restrictions to restrictions
    of C holds for every partition of the survivors and is exercised by
    the test suite.
    """
    e1 = set(E1)
    e2 = set(E2)
    if e1 & e2:
        raise ContractError("E1 and E2 overlap")
    c1 = c.minor(punctured=e2, shortened=e1)
    c2 = c.minor(punctured=e1, shortened=e2)
    return c1, c2
