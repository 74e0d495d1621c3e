"""Code composition by overlap sums and the inverse decompositions.

The m-overlap construction stacks two generator matrices so that the last
m coordinates of the first code coincide with the first m coordinates of
the second, then shortens the m overlap positions away.  m = 0 is the
direct sum; m = 1 under the 2-sum preconditions is the 2-sum; m = 3 under
the 3-sum preconditions is the 3-sum.  The 3-bar-sum is the dual twin of
the 3-sum: it extends each summand by its overlap triple before 3-summing.

Every constructor re-verifies its preconditions, even on internal calls:
the named clauses (P1), (P2), (A1), (A2), (A3) are part of the API and
their failures raise ContractError with the clause recorded.

The decompositions invert the sums: given an exact 2-separation (exact
non-minimal 3-separation) of a code, they produce a coordinate
permutation and two component codes whose 2-sum (3-sum) maps back onto
the original code under that permutation.  Components follow the overlap
convention above: overlap columns last in the first component, first in
the second.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .codes import LinearCode, direct_sum
from .connectivity import defect
from .errors import ContractError
from .gf2 import rank, rref


class SumKind(enum.Enum):
    DIRECT = "direct"
    TWO_SUM = "2sum"
    THREE_SUM = "3sum"
    THREE_BAR_SUM = "3barsum"


@dataclass(frozen=True)
class DecompResult:
    """Permutation and components with permute(compose(c1, kind, c2), pi)
    equal to the decomposed code."""

    pi: tuple[int, ...]
    c1: LinearCode
    c2: LinearCode
    kind: SumKind


def sum_m(c: LinearCode, cp: LinearCode, m: int) -> LinearCode:
    """Overlap the last m coordinates of ``c`` with the first m of ``cp``
    and shorten the overlap away; length n + n' - 2m.

    Requires 0 <= 2m < min(n, n').
    """
    if m < 0 or 2 * m >= min(c.n, cp.n):
        raise ContractError(f"overlap m={m} violates 0 <= 2m < min(n, n')")
    if m == 0:
        return direct_sum(c, cp)
    stacked = _parallel_stack(c, cp, m)
    overlap = range(c.n - m + 1, c.n + 1)
    return stacked.shorten(overlap)


def _parallel_stack(c: LinearCode, cp: LinearCode, m: int) -> LinearCode:
    """Generator stack with an m-column overlap; length n + n' - m."""
    n = c.n
    rows = list(c.gen.rows)
    rows += [g << (n - m) for g in cp.gen.rows]
    return LinearCode.from_generator(rows, n + cp.n - m)


def _weight12_tail_words(c: LinearCode, coords: Sequence[int]) -> list[int]:
    """Nonzero words of C supported inside ``coords`` with weight 1 or 2."""
    masks = []
    sub = 1 << len(coords)
    for pattern in range(1, sub):
        if pattern.bit_count() not in (1, 2):
            continue
        word = 0
        for t, j in enumerate(coords):
            if (pattern >> t) & 1:
                word |= 1 << (j - 1)
        if c.contains_mask(word):
            masks.append(word)
    return masks


def check_two_sum_preconditions(c: LinearCode, cp: LinearCode) -> None:
    if c.n < 3 or cp.n < 3:
        raise ContractError("2-sum requires both lengths >= 3")
    if c.contains_mask(1 << (c.n - 1)):
        raise ContractError("2-sum clause (P1): 0...01 is a codeword of C", clause="P1")
    if not any((g >> (c.n - 1)) & 1 for g in c.gen.rows):
        raise ContractError(
            "2-sum clause (P1): last coordinate of C is identically zero", clause="P1"
        )
    if cp.contains_mask(1):
        raise ContractError("2-sum clause (P2): 10...0 is a codeword of C'", clause="P2")
    if not any(g & 1 for g in cp.gen.rows):
        raise ContractError(
            "2-sum clause (P2): first coordinate of C' is identically zero", clause="P2"
        )


def two_sum(c: LinearCode, cp: LinearCode) -> LinearCode:
    """The 2-sum: 1-coordinate overlap sum under clauses (P1) and (P2).

    Dimension is dim(C) + dim(C') - 1.
    """
    check_two_sum_preconditions(c, cp)
    result = sum_m(c, cp, 1)
    assert result.k == c.k + cp.k - 1
    return result


def check_three_sum_preconditions(c: LinearCode, cp: LinearCode) -> None:
    if c.n < 7 or cp.n < 7:
        raise ContractError("3-sum requires both lengths >= 7")
    tail = [c.n - 2, c.n - 1, c.n]
    head = [1, 2, 3]
    if _weight12_tail_words(c, tail):
        raise ContractError(
            "3-sum clause (A1): C has a weight-1 or weight-2 word on its last three coordinates",
            clause="A1",
        )
    if _weight12_tail_words(c.dual(), tail):
        raise ContractError(
            "3-sum clause (A1): the dual of C has a weight-1 or weight-2 word on its last three coordinates",
            clause="A1",
        )
    if _weight12_tail_words(cp, head):
        raise ContractError(
            "3-sum clause (A2): C' has a weight-1 or weight-2 word on its first three coordinates",
            clause="A2",
        )
    if _weight12_tail_words(cp.dual(), head):
        raise ContractError(
            "3-sum clause (A2): the dual of C' has a weight-1 or weight-2 word on its first three coordinates",
            clause="A2",
        )
    tail_mask = 0b111 << (c.n - 3)
    if not c.contains_mask(tail_mask):
        raise ContractError("3-sum clause (A3): 0...0111 is not in C", clause="A3")
    if not cp.contains_mask(0b111):
        raise ContractError("3-sum clause (A3): 1110...0 is not in C'", clause="A3")


def three_sum(c: LinearCode, cp: LinearCode) -> LinearCode:
    """The 3-sum: 3-coordinate overlap sum under clauses (A1)-(A3).

    Dimension is dim(C) + dim(C') - 4.
    """
    check_three_sum_preconditions(c, cp)
    result = sum_m(c, cp, 3)
    assert result.k == c.k + cp.k - 4
    return result


def check_three_bar_sum_preconditions(c: LinearCode, cp: LinearCode) -> None:
    if c.n < 7 or cp.n < 7:
        raise ContractError("3-bar-sum requires both lengths >= 7")
    tail = [c.n - 2, c.n - 1, c.n]
    head = [1, 2, 3]
    if _weight12_tail_words(c, tail) or _weight12_tail_words(c.dual(), tail):
        raise ContractError(
            "3-bar-sum clause (A1'): weight-1/2 word on the last three coordinates of C or its dual",
            clause="A1'",
        )
    if _weight12_tail_words(cp, head) or _weight12_tail_words(cp.dual(), head):
        raise ContractError(
            "3-bar-sum clause (A2'): weight-1/2 word on the first three coordinates of C' or its dual",
            clause="A2'",
        )
    if not c.dual().contains_mask(0b111 << (c.n - 3)):
        raise ContractError(
            "3-bar-sum clause (A3'): 0...0111 is not in the dual of C", clause="A3'"
        )
    if not cp.dual().contains_mask(0b111):
        raise ContractError(
            "3-bar-sum clause (A3'): 1110...0 is not in the dual of C'", clause="A3'"
        )


def _extend_by(c: LinearCode, mask: int) -> LinearCode:
    """The code spanned by C and one extra word."""
    return LinearCode.from_generator(list(c.gen.rows) + [mask], c.n)


def three_bar_sum(c: LinearCode, cp: LinearCode) -> LinearCode:
    """The 3-bar-sum under clauses (A1')-(A3'): extend each summand by its
    overlap triple, then 3-sum.

    Dimension is dim(C) + dim(C') - 2.
    """
    check_three_bar_sum_preconditions(c, cp)
    c_bar = _extend_by(c, 0b111 << (c.n - 3))
    cp_bar = _extend_by(cp, 0b111)
    result = three_sum(c_bar, cp_bar)
    assert result.k == c.k + cp.k - 2
    return result


def compose(c1: LinearCode, kind: SumKind, c2: LinearCode) -> LinearCode:
    if kind is SumKind.DIRECT:
        return direct_sum(c1, c2)
    if kind is SumKind.TWO_SUM:
        return two_sum(c1, c2)
    if kind is SumKind.THREE_SUM:
        return three_sum(c1, c2)
    if kind is SumKind.THREE_BAR_SUM:
        return three_bar_sum(c1, c2)
    raise ContractError(f"unknown sum kind {kind!r}")


# -- decompositions --------------------------------------------------------


def _blocked_rref(
    c: LinearCode, J: Sequence[int]
) -> tuple[list[int], int, int, tuple[int, ...]]:
    """Bring the generator into the separated block form.

    Reorders coordinates as (J, Jc), each side with its pivot columns
    first, and row-reduces.  Returns (rows, k1, k2, order) where ``order``
    maps block position t (1-based) to the original coordinate, k1 and k2
    are the ranks of the two restrictions, and ``rows`` generate the
    reordered code in the block shape

        [ I_k1   A   0   B ]
        [ 0      0   I   C ]

    with the lower identity of size k - k1.
    """
    j_sorted = sorted(J)
    jc_sorted = [x for x in range(1, c.n + 1) if x not in set(J)]
    k1 = c.restriction_dim(j_sorted)
    k2 = c.restriction_dim(jc_sorted)

    def reorder(coords: list[int]) -> list[int]:
        rows = []
        for g in c.gen.rows:
            r = 0
            for t, j in enumerate(coords):
                if (g >> (j - 1)) & 1:
                    r |= 1 << t
            rows.append(r)
        return rows

    order = j_sorted + jc_sorted
    _, pivots = rref(reorder(order), c.n)
    # Pull the pivot columns of each side to its front, preserving the
    # relative order of the rest for determinism.
    j_piv = [order[p] for p in pivots if p < len(j_sorted)]
    jc_piv = [order[p] for p in pivots if p >= len(j_sorted)]
    j_rest = [x for x in j_sorted if x not in set(j_piv)]
    jc_rest = [x for x in jc_sorted if x not in set(jc_piv)]
    final_order = j_piv + j_rest + jc_piv + jc_rest
    rows, _ = rref(reorder(final_order), c.n)
    return list(rows), k1, k2, tuple(final_order)


def _submatrix(rows: Sequence[int], row_range: range, col_range: range) -> list[int]:
    out = []
    for i in row_range:
        r = 0
        for t, j in enumerate(col_range):
            if (rows[i] >> j) & 1:
                r |= 1 << t
        out.append(r)
    return out


def decompose_two_sum(c: LinearCode, J: Iterable[int]) -> DecompResult:
    """Invert a 2-sum along an exact 2-separation (J, Jc).

    Returns components of lengths |J| + 1 and |Jc| + 1, both equivalent to
    proper minors of the input, and the permutation mapping their 2-sum
    back onto it.
    """
    j_list = sorted(set(J))
    jc_size = c.n - len(j_list)
    if min(len(j_list), jc_size) < 2 or defect(c, j_list) != 1:
        raise ContractError("(J, Jc) is not an exact 2-separation")

    rows, k1, k2, order = _blocked_rref(c, j_list)
    assert k1 + k2 == c.k + 1
    m = len(j_list)
    b_cols = range(m + k2 - 1, c.n)
    b_rows = _submatrix(rows, range(0, k1), b_cols)
    c_rows = _submatrix(rows, range(k1, c.k), b_cols)
    if rank(b_rows) != 1:
        raise ContractError("separation block does not have rank 1; separation not exact")
    b = next(r for r in b_rows if r)
    assert all(r in (0, b) for r in b_rows)
    b_tilde = 0
    for i, r in enumerate(b_rows):
        if r == b:
            b_tilde |= 1 << i

    # G1 = [I_k1 | A | b_tilde], one column appended after the J block.
    g1_rows = []
    for i in range(k1):
        r = rows[i] & ((1 << m) - 1)  # I_k1 and A columns
        if (b_tilde >> i) & 1:
            r |= 1 << m
        g1_rows.append(r)
    c1 = LinearCode.from_generator(g1_rows, m + 1)

    # G2 = [[1 0 b], [0 I_{k2-1} C]], overlap column first.
    g2_rows = [1 | (b << k2)]
    for i, cr in enumerate(c_rows):
        g2_rows.append((1 << (1 + i)) | (cr << k2))
    c2 = LinearCode.from_generator(g2_rows, jc_size + 1)

    pi = order
    recomposed = two_sum(c1, c2).permute(pi)
    if recomposed != c:
        raise AssertionError("2-sum decomposition failed to round-trip")
    return DecompResult(pi, c1, c2, SumKind.TWO_SUM)


def decompose_three_sum(c: LinearCode, J: Iterable[int]) -> DecompResult:
    """Invert a 3-sum along an exact non-minimal 3-separation (J, Jc).

    Requires both sides of size at least 4 and defect exactly 2.  Returns
    components of lengths |J| + 3 and |Jc| + 3; when the input is
    3-connected these are equivalent to proper minors of it.
    """
    j_list = sorted(set(J))
    jc_size = c.n - len(j_list)
    if min(len(j_list), jc_size) < 4:
        raise ContractError("3-sum decomposition needs min(|J|, |Jc|) >= 4")
    if defect(c, j_list) != 2:
        raise ContractError("(J, Jc) is not an exact 3-separation")

    rows, k1, k2, order = _blocked_rref(c, j_list)
    assert k1 + k2 == c.k + 2
    m = len(j_list)
    b_cols = range(m + k2 - 2, c.n)
    b_rows = _submatrix(rows, range(0, k1), b_cols)
    c_rows = _submatrix(rows, range(k1, c.k), b_cols)
    if rank(b_rows) != 2:
        raise ContractError("separation block does not have rank 2; separation not exact")
    x = next(r for r in b_rows if r)
    y = next(r for r in b_rows if r not in (0, x))
    assert all(r in (0, x, y, x ^ y) for r in b_rows)

    # D tags each rank-2 block row with one D-column: rows equal to x get
    # the third D column, y the second, x+y the first (packed LSB-first).
    tag = {0: 0b000, x: 0b100, y: 0b010, x ^ y: 0b001}
    g1_rows = []
    for i in range(k1):
        r = rows[i] & ((1 << m) - 1)
        r |= tag[b_rows[i]] << m
        g1_rows.append(r)
    g1_rows.append(0b111 << m)  # the word 0...0111
    c1 = LinearCode.from_generator(g1_rows, m + 3)

    # G2 = [[I_3 0 X], [0 I_{k2-2} C]] with X rows (x+y, y, x).
    width = jc_size + 3
    x_rows = [x ^ y, y, x]
    g2_rows = []
    for i in range(3):
        g2_rows.append((1 << i) | (x_rows[i] << (k2 + 1)))
    for i, cr in enumerate(c_rows):
        g2_rows.append((1 << (3 + i)) | (cr << (k2 + 1)))
    c2 = LinearCode.from_generator(g2_rows, width)

    pi = order
    recomposed = three_sum(c1, c2).permute(pi)
    if recomposed != c:
        raise AssertionError("3-sum decomposition failed to round-trip")
    return DecompResult(pi, c1, c2, SumKind.THREE_SUM)


def decompose_three_bar_sum(c: LinearCode, J: Iterable[int]) -> DecompResult:
    """Invert a 3-bar-sum along an exact non-minimal 3-separation.

    (J, Jc) is a 3-separation of a code iff it is one of the dual, so the
    dual is decomposed as a 3-sum over the same J and both components are
    dualized back.
    """
    dual_result = decompose_three_sum(c.dual(), J)
    c1 = dual_result.c1.dual()
    c2 = dual_result.c2.dual()
    pi = dual_result.pi
    recomposed = three_bar_sum(c1, c2).permute(pi)
    if recomposed != c:
        raise AssertionError("3-bar-sum decomposition failed to round-trip")
    return DecompResult(pi, c1, c2, SumKind.THREE_BAR_SUM)
