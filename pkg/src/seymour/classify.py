"""Code equivalence, minor containment, and family classification.

Equivalence search backtracks over coordinate bijections, pruned by
per-coordinate weight signatures and by multiset equality of codeword
projections onto the matched prefix.  Minor search enumerates puncture
and shorten sets compatible with the target parameters, pruned by
dimension and weight-enumerator filters before attempting equivalence.

Three minor-closed families are classified, each by its excluded minors
and, where the family is also closed under the sums, cross-checked by
the leaves of a complete decomposition tree:

  graphic               no minor among {H7, H7 dual, CK5D, CK33D}
  regular               no minor among {H7, H7 dual};
                        equivalently every complete-tree leaf is graphic,
                        co-graphic, or a copy of R10
  geometrically perfect no minor among {H7 dual, R10, CK5D};
                        equivalently every leaf of a 3-bar-homogeneous
                        complete tree is graphic or a copy of H7, CK33D,
                        or the dual Wagner-graph code
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

import numpy as np

from .catalog import catalog_code
from .codes import LinearCode, codeword_matrix, weight_enumerator
from .dectree import DecompNode, build_complete_tree, leaves
from .errors import ContractError, InputBoundError

DEFAULT_EQUIV_BOUND = 14
DEFAULT_MINOR_BOUND = 14

__all__ = [
    "equivalent",
    "has_minor",
    "classify_code",
    "weight_enumerator",
    "ClassReport",
]


def _column_signatures(words: np.ndarray, n: int) -> list[tuple[int, ...]]:
    """Per-coordinate counts of codewords of each weight covering it."""
    weights = words.sum(axis=1)
    sigs = []
    for j in range(n):
        counts = np.bincount(weights[words[:, j] == 1], minlength=n + 1)
        sigs.append(tuple(int(x) for x in counts))
    return sigs


def equivalent(
    c1: LinearCode, c2: LinearCode, bound: int = DEFAULT_EQUIV_BOUND
) -> tuple[int, ...] | None:
    """A coordinate permutation with permute(c1, pi) == c2, or None.

    Backtracking over coordinate assignments; a candidate prefix survives
    only if the multiset of codeword projections agrees on both sides.
    """
    if c1.n != c2.n or c1.k != c2.k:
        return None
    if c1.n > bound:
        raise InputBoundError(f"equivalence search limited to n <= {bound}")
    n = c1.n
    if n == 0:
        return ()
    w1 = codeword_matrix(c1)
    w2 = codeword_matrix(c2)
    if sorted(w1.sum(axis=1)) != sorted(w2.sum(axis=1)):
        return None
    sig1 = _column_signatures(w1, n)
    sig2 = _column_signatures(w2, n)
    if sorted(sig1) != sorted(sig2):
        return None

    # match rare signatures first to cut branching
    order = sorted(range(n), key=lambda j: (sig1.count(sig1[j]), j))
    assignment: dict[int, int] = {}
    used: set[int] = set()
    proj1 = np.zeros(w1.shape[0], dtype=np.int64)
    proj2 = np.zeros(w2.shape[0], dtype=np.int64)

    def backtrack(depth: int, p1: np.ndarray, p2: np.ndarray) -> bool:
        if depth == n:
            return True
        j = order[depth]
        for t in range(n):
            if t in used or sig2[t] != sig1[j]:
                continue
            q1 = p1 * 2 + w1[:, j]
            q2 = p2 * 2 + w2[:, t]
            if np.array_equal(np.sort(q1), np.sort(q2)):
                assignment[j] = t
                used.add(t)
                if backtrack(depth + 1, q1, q2):
                    return True
                used.discard(t)
                del assignment[j]
        return False

    if not backtrack(0, proj1, proj2):
        return None
    pi = tuple(assignment[j] + 1 for j in range(n))
    assert c1.permute(pi) == c2
    return pi


def has_minor(
    c: LinearCode,
    target: LinearCode,
    bound: int = DEFAULT_MINOR_BOUND,
    equiv_bound: int = DEFAULT_EQUIV_BOUND,
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]] | None:
    """Search for disjoint (X, Y) and pi with permute(C/X\\Y, pi) == target.

    X is punctured, Y is shortened.  Returns the lexicographically first
    witness, or None after exhausting all size-compatible pairs.
    """
    if c.n > bound:
        raise InputBoundError(f"minor search limited to n <= {bound}")
    removed = c.n - target.n
    if removed < 0:
        return None
    target_enum = weight_enumerator(target)
    coords = range(1, c.n + 1)
    for x_size in range(removed + 1):
        y_size = removed - x_size
        # puncturing drops dim by at most |X|, shortening by at most |Y|
        if not (c.k - x_size - y_size <= target.k <= c.k):
            continue
        if not ((c.n - c.k) - x_size - y_size <= target.n - target.k <= c.n - c.k):
            continue
        for x in combinations(coords, x_size):
            rest = [j for j in coords if j not in set(x)]
            for y in combinations(rest, y_size):
                m = c.minor(punctured=x, shortened=y)
                if m.k != target.k:
                    continue
                if weight_enumerator(m) != target_enum:
                    continue
                pi = equivalent(m, target, bound=equiv_bound)
                if pi is not None:
                    return (x, y, pi)
    return None


@dataclass(frozen=True)
class ClassReport:
    """Flags plus the evidence that produced them."""

    graphic: bool
    cographic: bool
    regular: bool
    geometrically_perfect: bool
    witnesses: dict = field(default_factory=dict)


_GRAPHIC_EXCLUDED = ("H7", "H7_DUAL", "CK5D", "CK33D")
_REGULAR_EXCLUDED = ("H7", "H7_DUAL")
_PERFECT_EXCLUDED = ("H7_DUAL", "R10", "CK5D")


def _excluded_minor_codes(names: Iterable[str]) -> list[tuple[str, LinearCode]]:
    out = []
    for name in names:
        if name == "H7_DUAL":
            out.append((name, catalog_code("H7").dual()))
        else:
            out.append((name, catalog_code(name)))
    return out


def _first_excluded_minor(c: LinearCode, names: Iterable[str], bound: int):
    for name, target in _excluded_minor_codes(names):
        witness = has_minor(c, target, bound=bound)
        if witness is not None:
            return name, witness
    return None


def is_graphic(c: LinearCode, bound: int = DEFAULT_MINOR_BOUND) -> bool:
    """Excluded-minor graphicness test."""
    return _first_excluded_minor(c, _GRAPHIC_EXCLUDED, bound) is None


def _leaf_is_regular_piece(leaf: LinearCode, bound: int) -> bool:
    if is_graphic(leaf, bound) or is_graphic(leaf.dual(), bound):
        return True
    return leaf.n <= DEFAULT_EQUIV_BOUND and equivalent(leaf, catalog_code("R10")) is not None


def _leaf_is_perfect_piece(leaf: LinearCode, bound: int) -> bool:
    if is_graphic(leaf, bound):
        return True
    if leaf.n > DEFAULT_EQUIV_BOUND:
        return False
    for name in ("H7", "CK33D", "CV8D"):
        if equivalent(leaf, catalog_code(name)) is not None:
            return True
    return False


def classify_code(
    c: LinearCode,
    bound: int = DEFAULT_MINOR_BOUND,
    with_tree_crosscheck: bool = True,
    tree: DecompNode | None = None,
) -> ClassReport:
    """Classify against the graphic, regular, and geometrically perfect
    families by excluded minors, cross-checked against the decomposition
    leaf characterizations when ``with_tree_crosscheck`` is set.

    The two methods are theorems of each other, so disagreement is a
    hard internal error, never a report.
    """
    witnesses: dict = {}

    graphic_hit = _first_excluded_minor(c, _GRAPHIC_EXCLUDED, bound)
    graphic = graphic_hit is None
    witnesses["graphic"] = {"excluded_minor": graphic_hit}

    cographic_hit = _first_excluded_minor(c.dual(), _GRAPHIC_EXCLUDED, bound)
    cographic = cographic_hit is None
    witnesses["cographic"] = {"excluded_minor": cographic_hit}

    regular_hit = _first_excluded_minor(c, _REGULAR_EXCLUDED, bound)
    regular = regular_hit is None
    witnesses["regular"] = {"excluded_minor": regular_hit}

    perfect_hit = _first_excluded_minor(c, _PERFECT_EXCLUDED, bound)
    perfect = perfect_hit is None
    witnesses["geometrically_perfect"] = {"excluded_minor": perfect_hit}

    if with_tree_crosscheck:
        bar_tree = tree if tree is not None else build_complete_tree(c, "three_bar_homogeneous")
        bar_leaves = leaves(bar_tree)
        regular_by_leaves = all(_leaf_is_regular_piece(l, bound) for l in bar_leaves)
        perfect_by_leaves = all(_leaf_is_perfect_piece(l, bound) for l in bar_leaves)
        witnesses["regular"]["leaves"] = regular_by_leaves
        witnesses["geometrically_perfect"]["leaves"] = perfect_by_leaves
        if regular_by_leaves != regular:
            raise AssertionError(
                "regular classification methods disagree; this is a bug"
            )
        if perfect_by_leaves != perfect:
            raise AssertionError(
                "geometric-perfection classification methods disagree; this is a bug"
            )

    return ClassReport(graphic, cographic, regular, perfect, witnesses)
