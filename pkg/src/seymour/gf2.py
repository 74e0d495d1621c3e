"""Bit-packed GF(2) matrix primitives.

A matrix over GF(2) is stored as a tuple of Python integers, one per row;
bit ``j`` (LSB first) of a row is the entry in column ``j+1``.  Python
integers give arbitrary width, cheap XOR row operations, and hashability
for free.

All functions are pure; BitMatrix values are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


def _lowest_set_bit(x: int) -> int:
    """Index of the least significant set bit of a nonzero integer."""
    return (x & -x).bit_length() - 1


def row_from_string(s: str) -> int:
    """Parse a 0/1 string, column 1 first, into a bit-packed row."""
    bits = [ch for ch in s if not ch.isspace()]
    if any(ch not in "01" for ch in bits):
        raise ValueError(f"invalid row string: {s!r}")
    value = 0
    for j, ch in enumerate(bits):
        if ch == "1":
            value |= 1 << j
    return value


def row_to_string(row: int, ncols: int) -> str:
    return "".join("1" if (row >> j) & 1 else "0" for j in range(ncols))


def rref(rows: Sequence[int], ncols: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Reduced row-echelon form over GF(2).

    Returns ``(reduced_rows, pivot_cols)`` where ``reduced_rows`` contains
    only the nonzero rows (so its length is the rank) sorted by pivot
    column, and ``pivot_cols`` holds the 0-based pivot columns.  The output
    is the canonical basis of the row space: two row sets span the same
    space iff their rref results are identical.
    """
    basis: list[int] = []  # kept sorted by pivot column
    pivots: list[int] = []
    for row in rows:
        for piv, b in zip(pivots, basis):
            if (row >> piv) & 1:
                row ^= b
        if row:
            piv = _lowest_set_bit(row)
            # Reduce existing rows by the new one, then insert in order.
            basis = [b ^ row if (b >> piv) & 1 else b for b in basis]
            pos = 0
            while pos < len(pivots) and pivots[pos] < piv:
                pos += 1
            pivots.insert(pos, piv)
            basis.insert(pos, row)
    if pivots and pivots[-1] >= ncols:
        raise ValueError("row has bits beyond the declared column count")
    return tuple(basis), tuple(pivots)


def rank(rows: Sequence[int]) -> int:
    """GF(2) rank of a set of bit-packed rows."""
    basis: list[int] = []
    pivots: list[int] = []
    for row in rows:
        for piv, b in zip(pivots, basis):
            if (row >> piv) & 1:
                row ^= b
        if row:
            pivots.append(_lowest_set_bit(row))
            basis.append(row)
            # keep reduced enough for elimination: sort not needed for rank
    return len(basis)


def reduce_vector(v: int, rref_rows: Sequence[int], pivot_cols: Sequence[int]) -> int:
    """Reduce ``v`` against an rref basis; the result is 0 iff ``v`` is in
    the row space."""
    for piv, row in zip(pivot_cols, rref_rows):
        if (v >> piv) & 1:
            v ^= row
    return v


def null_space(rows: Sequence[int], ncols: int) -> tuple[int, ...]:
    """Canonical (rref) basis of ``{x : rows @ x = 0}`` over GF(2)."""
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    free_cols = [j for j in range(ncols) if j not in pivot_set]
    basis = []
    for f in free_cols:
        word = 1 << f
        for piv, row in zip(pivots, reduced):
            if (row >> f) & 1:
                word |= 1 << piv
        basis.append(word)
    reduced_basis, _ = rref(basis, ncols)
    return reduced_basis


def column_masks(rows: Sequence[int], ncols: int) -> list[int]:
    """Transpose: per-column bit masks over row indices."""
    cols = [0] * ncols
    for i, row in enumerate(rows):
        while row:
            j = _lowest_set_bit(row)
            cols[j] |= 1 << i
            row &= row - 1
    return cols


def rank_of_columns(cols: Sequence[int], subset: Iterable[int]) -> int:
    """Rank of the submatrix formed by the given 0-based column indices."""
    return rank([cols[j] for j in subset])


def subset_rank_table(cols: Sequence[int]) -> bytearray:
    """Rank of every column subset, indexed by bitmask over columns.

    Runs a depth-first walk of the subset lattice so each of the 2^n
    subsets costs one incremental basis insertion.  Intended for the
    desk-scale exhaustive separation searches (n <= ~20).
    """
    n = len(cols)
    table = bytearray(1 << n)
    basis: list[int] = []  # elimination basis of the current path

    def walk(i: int, mask: int, rk: int) -> None:
        if i == n:
            table[mask] = rk
            return
        walk(i + 1, mask, rk)
        v = cols[i]
        for b in basis:
            low = b & -b
            if v & low:
                v ^= b
        if v:
            basis.append(v)
            walk(i + 1, mask | (1 << i), rk + 1)
            basis.pop()
        else:
            walk(i + 1, mask | (1 << i), rk)

    walk(0, 0, 0)
    return table


@dataclass(frozen=True)
class BitMatrix:
    """An immutable GF(2) matrix with bit-packed rows."""

    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.ncols < 0:
            raise ValueError("column count must be nonnegative")
        limit = 1 << self.ncols
        for row in self.rows:
            if row < 0 or row >= limit:
                raise ValueError("row does not fit the declared width")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> "BitMatrix":
        parsed = [[ch for ch in r if not ch.isspace()] for r in rows]
        widths = {len(r) for r in parsed}
        if len(widths) > 1:
            raise ValueError("ragged rows")
        ncols = widths.pop() if widths else 0
        return cls(ncols, tuple(row_from_string("".join(r)) for r in parsed))

    def to_strings(self) -> list[str]:
        return [row_to_string(r, self.ncols) for r in self.rows]

    def rref(self) -> tuple["BitMatrix", tuple[int, ...], int]:
        """Reduced row-echelon form: (matrix, 1-based pivot columns, rank).

        Zero rows are kept so the shape is preserved; they sink to the
        bottom.
        """
        reduced, pivots = rref(self.rows, self.ncols)
        padded = reduced + (0,) * (self.nrows - len(reduced))
        return (
            BitMatrix(self.ncols, padded),
            tuple(p + 1 for p in pivots),
            len(reduced),
        )

    def rank(self) -> int:
        return rank(self.rows)

    def entry(self, i: int, j: int) -> int:
        """Entry at 1-based row ``i``, column ``j``."""
        return (self.rows[i - 1] >> (j - 1)) & 1

    def __str__(self) -> str:
        return "\n".join(self.to_strings())
