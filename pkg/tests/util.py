"""Independent oracles and generators for the test suite.

Everything here avoids the package's bit-packed fast paths: matrices are
lists of 0/1 lists and elimination is dense, so an agreement between
these helpers and the library is a genuine cross-check.
"""

from __future__ import annotations

import itertools
import random

from seymour.codes import LinearCode

Matrix = list[list[int]]


def dense_rank(rows: Matrix) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                m[i] = [(a + b) % 2 for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def dense_row_space(rows: Matrix, ncols: int) -> frozenset[tuple[int, ...]]:
    """Every vector in the row space, as a frozenset (only for small rank)."""
    basis = []
    for r in rows:
        basis.append(tuple(r))
    space = {tuple([0] * ncols)}
    for r in basis:
        space |= {tuple((a + b) % 2 for a, b in zip(r, v)) for v in space}
    return frozenset(space)


def row_space_equal(a: Matrix, b: Matrix, ncols: int) -> bool:
    return dense_row_space(a, ncols) == dense_row_space(b, ncols)


def code_rows(c: LinearCode) -> Matrix:
    return [[int(ch) for ch in row] for row in c.gen.to_strings()]


def codes_equal_oracle(c1: LinearCode, c2: LinearCode) -> bool:
    """Row-space equality via dense enumeration; independent of rref."""
    if c1.n != c2.n:
        return False
    return row_space_equal(code_rows(c1), code_rows(c2), c1.n)


def all_words_oracle(c: LinearCode) -> list[tuple[int, ...]]:
    rows = code_rows(c)
    words = set()
    for picks in itertools.product((0, 1), repeat=len(rows)):
        w = [0] * c.n
        for take, row in zip(picks, rows):
            if take:
                w = [(a + b) % 2 for a, b in zip(w, row)]
        words.add(tuple(w))
    return sorted(words)


def random_code(rng: random.Random, n: int, k_max: int | None = None) -> LinearCode:
    """A random code of length n with a uniform random generator matrix."""
    if k_max is None:
        k_max = n
    k = rng.randint(0, min(k_max, n))
    rows = [rng.getrandbits(n) for _ in range(k)]
    return LinearCode.from_generator(rows, n)


def random_code_exact(rng: random.Random, n: int, k: int) -> LinearCode:
    """A random code of length n and dimension exactly k."""
    while True:
        rows = [rng.getrandbits(n) for _ in range(k)]
        c = LinearCode.from_generator(rows, n)
        if c.k == k:
            return c


def random_two_sum_pair(rng: random.Random, n_lo: int = 3, n_hi: int = 7):
    """A pair valid for the 2-sum: clauses (P1) and (P2) hold."""
    from seymour.sums import check_two_sum_preconditions

    while True:
        c = random_code(rng, rng.randint(n_lo, n_hi))
        cp = random_code(rng, rng.randint(n_lo, n_hi))
        try:
            check_two_sum_preconditions(c, cp)
            return c, cp
        except Exception:
            continue


def random_three_sum_pair(rng: random.Random, n_lo: int = 7, n_hi: int = 9):
    """A pair valid for the 3-sum: clauses (A1)-(A3) hold.

    Built constructively: generator rows whose 3-coordinate tails span
    the tail space as required, then rejection against the full clauses.
    """
    from seymour.sums import check_three_sum_preconditions

    def candidate(n: int, flip: bool) -> LinearCode:
        k_extra = rng.randint(0, n - 6)
        prefix_bits = n - 3
        rows = []
        tails = [0b100, 0b010, 0b111]  # ensures the tail restriction is full
        for t in tails:
            rows.append(rng.getrandbits(prefix_bits) | (t << prefix_bits))
        for _ in range(k_extra):
            rows.append(rng.getrandbits(prefix_bits))
        if flip:  # mirror so the special triple sits on the first coordinates
            rows = [_reverse_bits(r, n) for r in rows]
        return LinearCode.from_generator(rows, n)

    while True:
        c = candidate(rng.randint(n_lo, n_hi), flip=False)
        cp = candidate(rng.randint(n_lo, n_hi), flip=True)
        try:
            check_three_sum_preconditions(c, cp)
            return c, cp
        except Exception:
            continue


def random_three_bar_pair(rng: random.Random, n_lo: int = 7, n_hi: int = 9):
    """A pair valid for the 3-bar-sum, by dualizing a 3-sum-valid pair."""
    c, cp = random_three_sum_pair(rng, n_lo, n_hi)
    return c.dual(), cp.dual()


def _reverse_bits(value: int, n: int) -> int:
    out = 0
    for j in range(n):
        if (value >> j) & 1:
            out |= 1 << (n - 1 - j)
    return out


def random_connected_graph(rng: random.Random, nv: int, extra_edges: int):
    """A random connected simple graph: spanning tree plus extra edges."""
    from seymour.graphs import Graph

    edges = []
    for v in range(2, nv + 1):
        u = rng.randint(1, v - 1)
        edges.append((u, v))
    all_pairs = [
        (u, v)
        for u in range(1, nv + 1)
        for v in range(u + 1, nv + 1)
        if (u, v) not in set(edges)
    ]
    rng.shuffle(all_pairs)
    edges.extend(all_pairs[:extra_edges])
    rng.shuffle(edges)
    return Graph(nv, tuple(edges))


def vertex_connectivity(g) -> int:
    """Brute-force vertex connectivity of a connected simple graph."""
    nv = g.n_vertices
    adjacent = set()
    for u, v in g.edges:
        adjacent.add((u, v))
        adjacent.add((v, u))
    complete = all(
        (u, v) in adjacent for u in range(1, nv + 1) for v in range(1, nv + 1) if u != v
    )
    if complete:
        return nv - 1
    for size in range(nv - 1):
        for cut in itertools.combinations(range(1, nv + 1), size):
            if _disconnected_without(g, set(cut)):
                return size
    return nv - 1


def _disconnected_without(g, removed: set[int]) -> bool:
    keep = [v for v in range(1, g.n_vertices + 1) if v not in removed]
    if len(keep) <= 1:
        return False
    adj: dict[int, list[int]] = {v: [] for v in keep}
    for u, v in g.edges:
        if u in removed or v in removed or u == v:
            continue
        adj[u].append(v)
        adj[v].append(u)
    seen = {keep[0]}
    stack = [keep[0]]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) != len(keep)
