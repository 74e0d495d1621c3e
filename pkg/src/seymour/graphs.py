"""Graphs, graphic codes, and the T-join / Eulerian-subgraph solver.

A Graph is a multigraph (loops and parallel edges allowed) whose edge
order defines the coordinate order of its cycle code: the code whose
parity-check matrix is the vertex-edge incidence matrix.  Codewords of
that code are exactly the edge sets in which every vertex has even
degree (Eulerian subgraphs), which is what makes minimum-weight Eulerian
subgraph search a maximum-likelihood decoder for graphic codes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .codes import Codeword, LinearCode, minimal_codewords
from .errors import ContractError, InputBoundError

DEFAULT_REALIZE_BOUND = 16
DEFAULT_MATCHING_BOUND = 20


@dataclass(frozen=True)
class Graph:
    """A multigraph with 1-based vertices and ordered edges."""

    n_vertices: int
    edges: tuple[tuple[int, int], ...]
    weights: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        for u, v in self.edges:
            if not (1 <= u <= self.n_vertices and 1 <= v <= self.n_vertices):
                raise ContractError(f"edge ({u},{v}) outside vertex range")
        if self.weights is not None and len(self.weights) != len(self.edges):
            raise ContractError("weight list length differs from edge count")

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def degree_masks(self) -> list[int]:
        """Per-vertex incidence masks over edge indices (loops cancel)."""
        rows = [0] * self.n_vertices
        for j, (u, v) in enumerate(self.edges):
            rows[u - 1] ^= 1 << j
            rows[v - 1] ^= 1 << j
        return rows

    def components(self) -> list[set[int]]:
        parent = list(range(self.n_vertices + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        comps: dict[int, set[int]] = {}
        for v in range(1, self.n_vertices + 1):
            comps.setdefault(find(v), set()).add(v)
        return list(comps.values())

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


@dataclass(frozen=True)
class EdgeSet:
    """A subset of a graph's edges, packed as a bitset."""

    n_edges: int
    mask: int

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(j + 1 for j in range(self.n_edges) if (self.mask >> j) & 1)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def to_codeword(self) -> Codeword:
        return Codeword.from_mask(self.mask, self.n_edges)

    def __contains__(self, edge_index: int) -> bool:
        return bool((self.mask >> (edge_index - 1)) & 1)


def code_from_graph(g: Graph) -> LinearCode:
    """The cycle code of ``g``: incidence matrix as parity check.

    Length |E|, dimension |E| - |V| + t for t connected components.
    """
    if g.n_edges == 0:
        raise ContractError("graph has no edges")
    code = LinearCode.from_parity(g.degree_masks(), g.n_edges)
    t = len(g.components())
    assert code.k == g.n_edges - g.n_vertices + t
    return code


def girth(g: Graph) -> int | float:
    """Length of the shortest cycle; math.inf for forests."""
    if any(u == v for u, v in g.edges):
        return 1
    seen = set()
    for u, v in g.edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            return 2
        seen.add(key)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n_vertices + 1)]
    for j, (u, v) in enumerate(g.edges):
        adj[u].append((v, j))
        adj[v].append((u, j))
    best = math.inf
    for root in range(1, g.n_vertices + 1):
        dist = {root: 0}
        via_edge = {root: -1}
        queue = [root]
        while queue:
            nxt = []
            for x in queue:
                for y, j in adj[x]:
                    if j == via_edge[x]:
                        continue
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        via_edge[y] = j
                        nxt.append(y)
                    else:
                        # cycle through the BFS tree; may double-count but
                        # never undercounts, and the true girth is attained
                        # for some root.
                        best = min(best, dist[x] + dist[y] + 1)
            queue = nxt
    return best


@dataclass(frozen=True)
class GirthStats:
    girth: int | float
    avg_degree: float
    moore_bound_ok: bool | None
    rate_bound_ok: bool | None


def girth_stats(g: Graph, rate_threshold: float | None = None) -> GirthStats:
    """Girth plus instance-level checks of the girth bounds.

    ``moore_bound_ok`` evaluates g <= 4 + log|V| / log(avg_degree - 1),
    defined only when the average degree exceeds 2.  ``rate_bound_ok``
    evaluates d <= 4 log n / log(1 + r/2) for a given rate threshold r on
    a connected graph, with d the girth (= minimum distance of the cycle
    code) and n the edge count.
    """
    gth = girth(g)
    avg = 2.0 * g.n_edges / g.n_vertices if g.n_vertices else 0.0
    moore_ok = None
    if gth != math.inf and avg > 2.0:
        moore_ok = gth <= 4.0 + math.log(g.n_vertices) / math.log(avg - 1.0)
    rate_ok = None
    if rate_threshold is not None:
        if not g.is_connected():
            raise ContractError("rate bound check requires a connected graph")
        if gth != math.inf and g.n_edges >= 2:
            rate_ok = gth <= 4.0 * math.log(g.n_edges) / math.log(1.0 + rate_threshold / 2.0)
    return GirthStats(gth, avg, moore_ok, rate_ok)


# -- graph realization -----------------------------------------------------


def realize_graph(c: LinearCode, bound: int = DEFAULT_REALIZE_BOUND) -> Graph | None:
    """Search for a graph whose cycle code equals ``c`` bit-exactly.

    Exhaustive backtracking over edge-endpoint assignments, pruned by the
    code's minimal codewords (each must appear as a simple cycle), by the
    loop/parallel structure forced by weight-1 and weight-2 codewords, and
    by vertex-label symmetry breaking.  Returns None when no realization
    exists.  Worst case is exponential; inputs beyond ``bound`` are
    refused.
    """
    if c.n > bound:
        raise InputBoundError(f"realization search limited to n <= {bound}")
    if c.n == 0:
        return Graph(1, ())
    # Loops are exactly the coordinates whose weight-1 word is in the code,
    # i.e. the zero columns of the parity basis.
    loops = [j for j in range(1, c.n + 1) if c.contains_mask(1 << (j - 1))]
    core = c.puncture(loops)
    survivors = [j for j in range(1, c.n + 1) if j not in set(loops)]

    core_graph = _realize_loopless(core)
    if core_graph is None:
        return None
    edges = [None] * c.n
    for t, j in enumerate(survivors):
        edges[j - 1] = core_graph.edges[t]
    nv = max(core_graph.n_vertices, 1)
    for j in loops:
        edges[j - 1] = (1, 1)
    g = Graph(nv, tuple(edges))
    assert code_from_graph(g) == c
    return g


def _realize_loopless(c: LinearCode) -> Graph | None:
    n, k = c.n, c.k
    if n == 0:
        return Graph(1, ())
    n_vertices = n - k + 1  # connected realizations are enough
    if n_vertices < 2:
        return None

    # Parallel edges at (i, j) would force the weight-2 word e_i + e_j into
    # the code, which happens iff the parity columns at i and j coincide.
    par_cols = [0] * n
    for r, row in enumerate(c.par.rows):
        for j in range(n):
            if (row >> j) & 1:
                par_cols[j] |= 1 << r
    parallel_ok = [
        [par_cols[i] == par_cols[j] for j in range(n)] for i in range(n)
    ]

    circuits = [w.to_mask() for w in minimal_codewords(c)]
    circuits_at = [[m for m in circuits if (m >> j) & 1] for j in range(n)]

    # Order edges so each next one shares a circuit with those already
    # placed; binds the cycle constraints as early as possible.
    order = _constraint_order(n, circuits)
    pos = [0] * n
    for t, j in enumerate(order):
        pos[j] = t

    assign: list[tuple[int, int] | None] = [None] * n

    def circuit_consistent(mask: int) -> bool:
        deg: dict[int, int] = {}
        placed = 0
        total = mask.bit_count()
        for j in range(n):
            if (mask >> j) & 1 and assign[j] is not None:
                placed += 1
                u, v = assign[j]
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
        if any(d > 2 for d in deg.values()):
            return False
        if placed == total:
            # must be one simple closed cycle
            if any(d != 2 for d in deg.values()) or len(deg) != total:
                return False
            return _is_single_cycle(mask, assign)
        if placed and all(d == 2 for d in deg.values()):
            return False  # closed early with circuit edges left over
        return True

    def _is_single_cycle(mask: int, assign_: Sequence[tuple[int, int] | None]) -> bool:
        edges = [assign_[j] for j in range(n) if (mask >> j) & 1]
        adj: dict[int, list[int]] = {}
        for u, v in edges:  # type: ignore[misc]
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        start = next(iter(adj))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(adj)

    def backtrack(t: int, used: int) -> Graph | None:
        if t == n:
            g = Graph(n_vertices, tuple(assign))  # type: ignore[arg-type]
            if not g.is_connected():
                return None
            if LinearCode.from_parity(g.degree_masks(), n) == c:
                return g
            return None
        j = order[t]
        hi = min(n_vertices, used + 1)
        for u in range(1, hi + 1):
            for v in range(u + 1, min(n_vertices, max(used, u) + 1) + 1):
                ok = True
                for jj in range(n):
                    if assign[jj] == (u, v) and not parallel_ok[j][jj]:
                        ok = False
                        break
                if not ok:
                    continue
                assign[j] = (u, v)
                if all(circuit_consistent(m) for m in circuits_at[j]):
                    result = backtrack(t + 1, max(used, u, v))
                    if result is not None:
                        return result
                assign[j] = None
        return None

    return backtrack(0, 0)


def _constraint_order(n: int, circuits: Sequence[int]) -> list[int]:
    if not circuits:
        return list(range(n))
    order: list[int] = []
    placed = 0
    remaining = sorted(circuits, key=lambda m: (m.bit_count(), m))
    while remaining:
        # prefer the circuit sharing the most already-placed edges
        best = max(remaining, key=lambda m: ((m & placed).bit_count(), -m.bit_count()))
        remaining.remove(best)
        for j in range(n):
            if (best >> j) & 1 and not (placed >> j) & 1:
                order.append(j)
                placed |= 1 << j
    for j in range(n):
        if not (placed >> j) & 1:
            order.append(j)
    return order


# -- T-joins and Eulerian subgraphs ----------------------------------------


def _shortest_path_closure(
    g: Graph, weights: Sequence[float]
) -> tuple[list[list[float]], list[list[int]]]:
    """All-pairs shortest paths with deterministic edge-set witnesses.

    Returns (dist, path_mask) over 0-based vertex indices; parallel edges
    collapse to the cheapest (lowest index on ties).
    """
    nv = g.n_vertices
    inf = math.inf
    dist = [[0.0 if i == j else inf for j in range(nv)] for i in range(nv)]
    mask = [[0] * nv for _ in range(nv)]
    for j, (u, v) in enumerate(g.edges):
        a, b = u - 1, v - 1
        if a == b:
            continue
        if weights[j] < dist[a][b]:
            dist[a][b] = dist[b][a] = weights[j]
            mask[a][b] = mask[b][a] = 1 << j
    for m in range(nv):
        dm = dist[m]
        for i in range(nv):
            dim = dist[i][m]
            if dim == inf:
                continue
            row = dist[i]
            for j in range(nv):
                alt = dim + dm[j]
                if alt < row[j]:
                    row[j] = alt
                    mask[i][j] = mask[i][m] ^ mask[m][j]
    return dist, mask


def t_join(
    g: Graph,
    weights: Sequence[float],
    terminals: Iterable[int],
    matching_bound: int = DEFAULT_MATCHING_BOUND,
) -> EdgeSet:
    """Minimum-weight edge set with odd degree exactly at ``terminals``.

    Solved by shortest-path metric closure over the terminals followed by
    an exact minimum-weight perfect matching (subset dynamic program).
    Weights must be nonnegative.
    """
    t_list = sorted(set(terminals))
    if len(weights) != g.n_edges:
        raise ContractError("weight list length differs from edge count")
    if any(w < 0 for w in weights):
        raise ContractError("t_join requires nonnegative weights")
    for t in t_list:
        if not 1 <= t <= g.n_vertices:
            raise ContractError(f"terminal {t} outside vertex range")
    if len(t_list) % 2 != 0:
        raise ContractError("terminal set must have even size")
    for comp in g.components():
        if len(comp & set(t_list)) % 2 != 0:
            raise ContractError(
                "infeasible: a component contains an odd number of terminals"
            )
    if len(t_list) > matching_bound:
        raise InputBoundError(
            f"matching DP limited to {matching_bound} terminals, got {len(t_list)}"
        )
    if not t_list:
        return EdgeSet(g.n_edges, 0)

    dist, mask = _shortest_path_closure(g, weights)
    idx = [t - 1 for t in t_list]
    m = len(idx)
    full = (1 << m) - 1
    memo: dict[int, tuple[float, int]] = {full: (0.0, 0)}

    def solve(state: int) -> tuple[float, int]:
        """(cost, xor-of-path-masks) for matching the unset terminals."""
        if state in memo:
            return memo[state]
        first = next(i for i in range(m) if not (state >> i) & 1)
        best = (math.inf, 0)
        for other in range(first + 1, m):
            if (state >> other) & 1:
                continue
            d = dist[idx[first]][idx[other]]
            if d == math.inf:
                continue
            sub_cost, sub_mask = solve(state | (1 << first) | (1 << other))
            cand = (d + sub_cost, mask[idx[first]][idx[other]] ^ sub_mask)
            if cand[0] < best[0]:
                best = cand
        memo[state] = best
        return best

    cost, join_mask = solve(0)
    assert cost != math.inf
    result = EdgeSet(g.n_edges, join_mask)
    assert _odd_vertices(g, join_mask) == set(t_list)
    return result


def _odd_vertices(g: Graph, mask: int) -> set[int]:
    deg = [0] * (g.n_vertices + 1)
    for j, (u, v) in enumerate(g.edges):
        if (mask >> j) & 1:
            if u == v:
                continue
            deg[u] += 1
            deg[v] += 1
    return {v for v in range(1, g.n_vertices + 1) if deg[v] % 2}


def min_eulerian_subgraph(g: Graph, weights: Sequence[float]) -> EdgeSet:
    """Minimum-total-weight edge set with all vertex degrees even.

    Flips the negative-weight edges in, then repairs the parity with a
    minimum T-join on the absolute weights; the symmetric difference is
    optimal.  The optimum is never positive since the empty set is
    feasible.
    """
    if len(weights) != g.n_edges:
        raise ContractError("weight list length differs from edge count")
    negatives = 0
    for j, w in enumerate(weights):
        if w < 0:
            negatives |= 1 << j
    odd = _odd_vertices(g, negatives)
    join = t_join(g, [abs(w) for w in weights], odd)
    result_mask = join.mask ^ negatives
    assert not _odd_vertices(g, result_mask)
    return EdgeSet(g.n_edges, result_mask)


def graphic_linmin(g: Graph, gamma: Sequence[float]) -> tuple[Codeword, float]:
    """Minimize <gamma, c> over the cycle code of ``g``.

    The minimizer is the indicator word of a minimum-weight Eulerian
    subgraph under edge weights gamma.
    """
    if len(gamma) != g.n_edges:
        raise ContractError("cost vector length differs from edge count")
    best = min_eulerian_subgraph(g, gamma)
    word = best.to_codeword()
    cost = sum(gamma[j - 1] for j in best.indices)
    return word, cost


# -- graph file format -----------------------------------------------------


def parse_graph_file(text: str) -> Graph:
    """Parse '``|V| |E|``' then one '``u v [weight]``' line per edge."""
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise ContractError("empty graph file")
    head = lines[0].split()
    if len(head) != 2:
        raise ContractError(f"expected header '|V| |E|', got {lines[0]!r}")
    nv, ne = int(head[0]), int(head[1])
    if len(lines) - 1 != ne:
        raise ContractError(f"expected {ne} edge lines, found {len(lines) - 1}")
    edges = []
    weights: list[float] = []
    weighted = None
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) not in (2, 3):
            raise ContractError(f"bad edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
        has_w = len(parts) == 3
        if weighted is None:
            weighted = has_w
        elif weighted != has_w:
            raise ContractError("mix of weighted and unweighted edge lines")
        if has_w:
            weights.append(float(parts[2]))
    return Graph(nv, tuple(edges), tuple(weights) if weighted else None)


def load_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph_file(fh.read())


def format_graph_file(g: Graph) -> str:
    lines = [f"{g.n_vertices} {g.n_edges}"]
    for j, (u, v) in enumerate(g.edges):
        if g.weights is not None:
            lines.append(f"{u} {v} {g.weights[j]}")
        else:
            lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def complete_graph(m: int) -> Graph:
    edges = tuple((u, v) for u in range(1, m + 1) for v in range(u + 1, m + 1))
    return Graph(m, edges)


def complete_bipartite_graph(a: int, b: int) -> Graph:
    edges = tuple((u, a + v) for u in range(1, a + 1) for v in range(1, b + 1))
    return Graph(a + b, edges)


def cycle_graph(m: int) -> Graph:
    edges = tuple((i, (i % m) + 1) for i in range(1, m + 1))
    return Graph(m, edges)


def wagner_graph() -> Graph:
    """The 8-cycle with its four diameters; girth 4, 12 edges."""
    rim = tuple((i, (i % 8) + 1) for i in range(1, 9))
    chords = tuple((i, i + 4) for i in range(1, 5))
    return Graph(8, rim + chords)
