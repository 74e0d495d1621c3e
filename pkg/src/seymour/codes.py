"""Binary linear codes as immutable values.

A code is held by a full-row-rank generator basis in reduced row-echelon
form together with its cached parity basis, also in rref.  Keeping both
bases canonical makes code equality a plain tuple comparison and makes the
dual involution exact.

Coordinates are 1-based in every public interface; bit positions inside
the packed rows are an implementation detail.
"""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import ContractError, InputBoundError
from .gf2 import BitMatrix, null_space, rref, row_from_string, row_to_string

#: Default cap on the number of words enumerated by brute-force operations.
DEFAULT_ENUM_BOUND = 1 << 24

_ENUM_BOUND_ENV = "SEYMOUR_ENUM_BOUND"


def enumeration_bound() -> int:
    """Active word-count bound for brute-force enumeration.

    The environment variable SEYMOUR_ENUM_BOUND (a word count) overrides
    the default of 2**24.
    """
    raw = os.environ.get(_ENUM_BOUND_ENV)
    if raw is None:
        return DEFAULT_ENUM_BOUND
    try:
        return int(raw)
    except ValueError as exc:
        raise ContractError(f"{_ENUM_BOUND_ENV} must be an integer: {raw!r}") from exc


def _check_enum(k: int, bound: int | None) -> None:
    limit = enumeration_bound() if bound is None else bound
    if (1 << k) > limit:
        raise InputBoundError(
            f"enumeration of 2^{k} codewords exceeds the bound of {limit} words; "
            f"raise {_ENUM_BOUND_ENV} or pass an explicit bound to proceed"
        )


@dataclass(frozen=True)
class Codeword:
    """A length-n binary word with its Hamming weight cached."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("codeword bits must be 0/1")
        object.__setattr__(self, "_weight", sum(self.bits))

    @property
    def weight(self) -> int:
        return self._weight  # type: ignore[attr-defined]

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def support(self) -> tuple[int, ...]:
        """1-based positions of the set bits."""
        return tuple(i + 1 for i, b in enumerate(self.bits) if b)

    @classmethod
    def from_mask(cls, mask: int, n: int) -> "Codeword":
        return cls(tuple((mask >> j) & 1 for j in range(n)))

    def to_mask(self) -> int:
        m = 0
        for j, b in enumerate(self.bits):
            if b:
                m |= 1 << j
        return m

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


@dataclass(frozen=True)
class LinearCode:
    """An [n, k] binary linear code.

    ``gen`` is a k x n generator basis and ``par`` the (n-k) x n parity
    basis; both are full row rank and in canonical rref, and they satisfy
    gen @ par.T = 0 over GF(2).
    """

    n: int
    k: int
    gen: BitMatrix
    par: BitMatrix = field(repr=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("length must be nonnegative")
        if self.gen.nrows != self.k or self.par.nrows != self.n - self.k:
            raise ValueError("basis shapes do not match (n, k)")
        for g in self.gen.rows:
            for h in self.par.rows:
                if (g & h).bit_count() & 1:
                    raise ValueError("generator and parity bases are not orthogonal")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_generator(rows: Sequence[int] | BitMatrix, n: int | None = None) -> "LinearCode":
        """Build a code from (possibly redundant) generator rows."""
        if isinstance(rows, BitMatrix):
            n = rows.ncols
            rows = rows.rows
        if n is None:
            raise ValueError("length n is required with raw rows")
        gen_rows, _ = rref(rows, n)
        par_rows = null_space(gen_rows, n)
        return LinearCode(n, len(gen_rows), BitMatrix(n, gen_rows), BitMatrix(n, par_rows))

    @staticmethod
    def from_parity(rows: Sequence[int] | BitMatrix, n: int | None = None) -> "LinearCode":
        """Build a code from (possibly redundant) parity-check rows."""
        if isinstance(rows, BitMatrix):
            n = rows.ncols
            rows = rows.rows
        if n is None:
            raise ValueError("length n is required with raw rows")
        par_rows, _ = rref(rows, n)
        gen_rows = null_space(par_rows, n)
        return LinearCode(n, len(gen_rows), BitMatrix(n, gen_rows), BitMatrix(n, par_rows))

    @staticmethod
    def from_strings(rows: Iterable[str], parity: bool = False) -> "LinearCode":
        m = BitMatrix.from_strings(rows)
        return LinearCode.from_parity(m) if parity else LinearCode.from_generator(m)

    # -- basic queries -----------------------------------------------------

    def contains_mask(self, mask: int) -> bool:
        # gen is in rref: each row's pivot is its lowest set bit.
        for g in self.gen.rows:
            if mask & (g & -g):
                mask ^= g
        return mask == 0

    def contains(self, word: Codeword | Sequence[int]) -> bool:
        bits = word.bits if isinstance(word, Codeword) else tuple(word)
        if len(bits) != self.n:
            return False
        mask = 0
        for j, b in enumerate(bits):
            if b:
                mask |= 1 << j
        return self.contains_mask(mask)

    def words(self, bound: int | None = None) -> Iterator[int]:
        """All 2^k codewords as bit masks, Gray-code order (starts at 0)."""
        _check_enum(self.k, bound)
        word = 0
        yield word
        gray_prev = 0
        for i in range(1, 1 << self.k):
            gray = i ^ (i >> 1)
            j = (gray ^ gray_prev).bit_length() - 1
            word ^= self.gen.rows[j]
            gray_prev = gray
            yield word

    def dual(self) -> "LinearCode":
        """The dual code; an exact involution."""
        return LinearCode(self.n, self.n - self.k, self.par, self.gen)

    def restrict(self, coords: Iterable[int]) -> "LinearCode":
        """Restriction onto the 1-based coordinates ``coords``.

        Equal to puncturing the complement and projecting onto the kept
        positions in ascending order.
        """
        keep = sorted(set(coords))
        _check_coords(keep, self.n)
        rows = []
        for g in self.gen.rows:
            r = 0
            for t, j in enumerate(keep):
                if (g >> (j - 1)) & 1:
                    r |= 1 << t
            rows.append(r)
        return LinearCode.from_generator(rows, len(keep))

    def restriction_dim(self, coords: Iterable[int]) -> int:
        """dim of the restriction, i.e. the rank of those generator columns."""
        keep = sorted(set(coords))
        _check_coords(keep, self.n)
        cols = []
        for j in keep:
            col = 0
            for i, g in enumerate(self.gen.rows):
                if (g >> (j - 1)) & 1:
                    col |= 1 << i
            cols.append(col)
        basis: list[int] = []
        for v in cols:
            for b in basis:
                low = b & -b
                if v & low:
                    v ^= b
            if v:
                basis.append(v)
        return len(basis)

    def puncture(self, coords: Iterable[int]) -> "LinearCode":
        """Drop generator columns at ``coords`` and re-rank."""
        drop = set(coords)
        _check_coords(sorted(drop), self.n)
        return self.restrict(j for j in range(1, self.n + 1) if j not in drop)

    def shorten(self, coords: Iterable[int]) -> "LinearCode":
        """Shorten at ``coords``: puncture the dual there and dualize back."""
        drop = set(coords)
        _check_coords(sorted(drop), self.n)
        return self.dual().puncture(drop).dual()

    def minor(self, punctured: Iterable[int] = (), shortened: Iterable[int] = ()) -> "LinearCode":
        """The minor obtained by puncturing X and shortening Y.

        X and Y must be disjoint; the order of the two operations does not
        matter.
        """
        x = set(punctured)
        y = set(shortened)
        if x & y:
            raise ContractError("punctured and shortened coordinate sets overlap")
        _check_coords(sorted(x | y), self.n)
        shortened_code = self.shorten(y)
        # Shortening removed the Y columns; renumber X into the survivor order.
        survivors = [j for j in range(1, self.n + 1) if j not in y]
        remap = {j: t + 1 for t, j in enumerate(survivors)}
        return shortened_code.puncture(remap[j] for j in x)

    def permute(self, pi: Sequence[int]) -> "LinearCode":
        """Apply a coordinate permutation: column i moves to position pi[i-1]."""
        _check_permutation(pi, self.n)
        rows = []
        for g in self.gen.rows:
            r = 0
            for i in range(1, self.n + 1):
                if (g >> (i - 1)) & 1:
                    r |= 1 << (pi[i - 1] - 1)
            rows.append(r)
        return LinearCode.from_generator(rows, self.n)

    def __str__(self) -> str:
        return f"[{self.n},{self.k}] code with generator\n{self.gen}"


def _check_coords(coords: Sequence[int], n: int) -> None:
    for j in coords:
        if not 1 <= j <= n:
            raise ContractError(f"coordinate {j} outside [1, {n}]")


def _check_permutation(pi: Sequence[int], n: int) -> None:
    if sorted(pi) != list(range(1, n + 1)):
        raise ContractError(f"not a permutation of [{n}]: {list(pi)!r}")


def inverse_permutation(pi: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(pi)
    for i, image in enumerate(pi):
        inv[image - 1] = i + 1
    return tuple(inv)


def compose_permutations(outer: Sequence[int], inner: Sequence[int]) -> tuple[int, ...]:
    """Permutation equal to applying ``inner`` first, then ``outer``."""
    return tuple(outer[inner[i] - 1] for i in range(len(inner)))


def direct_sum(c1: LinearCode, c2: LinearCode) -> LinearCode:
    """Block-diagonal sum: length n1+n2, dimension k1+k2."""
    rows = list(c1.gen.rows)
    rows += [g << c1.n for g in c2.gen.rows]
    return LinearCode.from_generator(rows, c1.n + c2.n)


def equal(c1: LinearCode, c2: LinearCode) -> bool:
    """Row-space equality: same length and identical canonical bases."""
    return c1.n == c2.n and c1.gen.rows == c2.gen.rows


@functools.lru_cache(maxsize=64)
def codeword_matrix(c: LinearCode) -> np.ndarray:
    """All 2^k codewords as a (2^k, n) uint8 array, message order.

    Cached per code; used by the vectorized brute-force paths.
    """
    _check_enum(c.k, None)
    gen = np.array(
        [[(g >> j) & 1 for j in range(c.n)] for g in c.gen.rows], dtype=np.uint8
    ).reshape(c.k, c.n)
    msgs = (np.arange(1 << c.k, dtype=np.uint32)[:, None] >> np.arange(c.k, dtype=np.uint32)) & 1
    return (msgs.astype(np.uint8) @ gen) % 2


def min_weight_bruteforce(c: LinearCode, bound: int | None = None) -> int:
    """Minimum Hamming weight over all nonzero codewords, by enumeration.

    Raises on the zero code (there is no nonzero codeword) and refuses
    codes whose dimension exceeds the enumeration bound.
    """
    if c.k == 0:
        raise ContractError("zero code has no nonzero codeword")
    _check_enum(c.k, bound)
    best = c.n + 1
    for w in c.words(bound=bound):
        if w:
            wt = w.bit_count()
            if wt < best:
                best = wt
    return best


def weight_enumerator(c: LinearCode, bound: int | None = None) -> tuple[int, ...]:
    """Coefficients A_0..A_n counting codewords by Hamming weight."""
    _check_enum(c.k, bound)
    counts = [0] * (c.n + 1)
    for w in c.words(bound=bound):
        counts[w.bit_count()] += 1
    return tuple(counts)


def minimal_codewords(c: LinearCode, bound: int | None = None) -> list[Codeword]:
    """All nonzero codewords whose support contains no other nonzero
    codeword's support.

    Distinct binary words have distinct supports, so containment is always
    strict and it suffices to test candidates, in order of increasing
    weight, against the minimal words already accepted.
    """
    _check_enum(c.k, bound)
    words = sorted((w for w in c.words(bound=bound) if w), key=lambda w: (w.bit_count(), w))
    minimal: list[int] = []
    for w in words:
        if all(m & ~w for m in minimal):
            minimal.append(w)
    minimal.sort()
    return [Codeword.from_mask(m, c.n) for m in minimal]


# -- code file format ------------------------------------------------------


def parse_code_file(text: str) -> LinearCode:
    """Parse the text code format.

    First meaningful line is ``k n``; the next k lines are 0/1 rows of
    length n.  A ``# parity`` line before the header switches the rows to
    parity-check interpretation.  Other ``#`` lines are comments and
    whitespace inside rows is ignored.
    """
    parity = False
    header: tuple[int, int] | None = None
    rows: list[str] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if header is None and line[1:].strip().lower() == "parity":
                parity = True
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 2:
                raise ContractError(f"expected header 'k n', got {line!r}")
            header = (int(parts[0]), int(parts[1]))
            continue
        rows.append(line)
    if header is None:
        raise ContractError("missing 'k n' header line")
    nrows, n = header
    if len(rows) != nrows:
        raise ContractError(f"expected {nrows} rows, found {len(rows)}")
    packed = []
    for r in rows:
        digits = "".join(ch for ch in r if not ch.isspace())
        if len(digits) != n:
            raise ContractError(f"row has {len(digits)} columns, expected {n}")
        packed.append(row_from_string(digits))
    if parity:
        return LinearCode.from_parity(packed, n)
    return LinearCode.from_generator(packed, n)


def load_code(path: str | os.PathLike) -> LinearCode:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_code_file(fh.read())


def format_code_file(c: LinearCode) -> str:
    lines = [f"{c.k} {c.n}"]
    lines += [row_to_string(g, c.n) for g in c.gen.rows]
    return "\n".join(lines) + "\n"


def save_code(c: LinearCode, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_code_file(c))
