"""Maximum-likelihood decoding as linear-cost minimization over a code.

Over a discrete memoryless channel, the ML codeword for a received word y
is the codeword minimizing <gamma, c> with gamma_i the per-symbol
log-likelihood ratio log(Pr[y_i|0] / Pr[y_i|1]).  The minimization is
solved either by brute-force enumeration (the oracle) or by recursing
down a decomposition tree: a direct-sum node splits the cost vector, a
2-sum node reduces to two subproblems on the first component and one on
the second, and a 3-bar-sum node to four and one.  The subproblems pin
the overlap coordinates with a weight M = 1 + sum|gamma_i| that dominates
every achievable cost difference, which forces the overlap patterns the
assembly step needs.

Costs are binary floats; for integer-valued inputs every intermediate
quantity is a small dyadic rational, so those runs are exact.  Real
inputs carry a documented 1e-9 comparison tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .codes import Codeword, LinearCode, codeword_matrix, enumeration_bound
from .dectree import DecompNode, iter_nodes
from .errors import ContractError, InputBoundError
from .graphs import Graph, graphic_linmin

CostVector = Sequence[float]

COST_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Channel:
    """A discrete memoryless channel given by per-symbol likelihoods.

    ``given_zero[y]`` and ``given_one[y]`` are Pr[y | x=0] and
    Pr[y | x=1] over a finite output alphabet indexed 0..|Y|-1.
    """

    given_zero: tuple[float, ...]
    given_one: tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.given_zero) != len(self.given_one):
            raise ContractError("likelihood rows must share an output alphabet")
        for row in (self.given_zero, self.given_one):
            if any(p < 0 for p in row):
                raise ContractError("likelihoods must be nonnegative")
            if abs(sum(row) - 1.0) > 1e-9:
                raise ContractError("likelihood rows must sum to 1")

    @staticmethod
    def bsc(p: float) -> "Channel":
        """Binary symmetric channel with crossover probability p."""
        if not 0 <= p <= 1:
            raise ContractError("crossover probability must be in [0, 1]")
        return Channel((1 - p, p), (p, 1 - p))


def cost_from_channel(received: Sequence[int], channel: Channel) -> tuple[float, ...]:
    """Per-coordinate log-likelihood ratios log(Pr[y|0] / Pr[y|1])."""
    gamma = []
    for y in received:
        p0 = channel.given_zero[y]
        p1 = channel.given_one[y]
        if p0 <= 0 or p1 <= 0:
            raise ContractError(f"zero likelihood at observed symbol {y}")
        gamma.append(math.log(p0 / p1))
    return tuple(gamma)


def linmin_bruteforce(
    c: LinearCode, gamma: CostVector, bound: int | None = None
) -> tuple[Codeword, float]:
    """Global minimizer of <gamma, c> over all 2^k codewords.

    Ties go to the lexicographically least codeword (coordinate 1 most
    significant).  This is the oracle the tree decoder is tested against.
    """
    if len(gamma) != c.n:
        raise ContractError("cost vector length differs from code length")
    limit = enumeration_bound() if bound is None else bound
    if (1 << c.k) > limit:
        raise InputBoundError(f"brute-force minimization over 2^{c.k} words exceeds {limit}")
    words = codeword_matrix(c)
    costs = words @ np.asarray(gamma, dtype=np.float64)
    best = float(costs.min())
    if best == 0.0:
        # the zero word ties at cost 0 and is the lexicographic minimum
        return Codeword((0,) * c.n), 0.0
    ties = np.flatnonzero(costs == best)

    def packed(row: np.ndarray) -> int:
        value = 0
        for b in row:
            value = (value << 1) | int(b)
        return value

    winner = min(ties, key=lambda t: packed(words[t]))
    return Codeword(tuple(int(b) for b in words[winner])), best


@dataclass
class DecodeContext:
    """Leaf-solver registry and enumeration bound for the tree decoder.

    Solvers are tried in order; each returns a (codeword, cost) pair or
    None to pass.  The default order is exhaustive enumeration (when the
    leaf dimension is within bound), then a graphic solver for leaves
    with a cached graph realization, then catalog lookup.
    """

    enum_bound: int | None = None
    realizations: dict[LinearCode, Graph] = field(default_factory=dict)
    catalog_words: dict[LinearCode, Sequence[int]] = field(default_factory=dict)
    solvers: list[Callable[[LinearCode, CostVector], tuple[Codeword, float] | None]] = field(
        default_factory=list
    )

    def __post_init__(self) -> None:
        if not self.solvers:
            self.solvers = [self._exhaustive, self._graphic, self._catalog]

    def big_weight(self, gamma: CostVector) -> float:
        return 1 + sum(abs(g) for g in gamma)

    def solve_leaf(self, code: LinearCode, gamma: CostVector) -> tuple[Codeword, float]:
        for solver in self.solvers:
            result = solver(code, gamma)
            if result is not None:
                return result
        raise ContractError(
            f"no registered solver can handle a [{code.n},{code.k}] leaf"
        )

    def _exhaustive(self, code: LinearCode, gamma: CostVector):
        limit = enumeration_bound() if self.enum_bound is None else self.enum_bound
        if (1 << code.k) > limit:
            return None
        return linmin_bruteforce(code, gamma, bound=limit)

    def _graphic(self, code: LinearCode, gamma: CostVector):
        graph = self.realizations.get(code)
        if graph is None:
            return None
        return graphic_linmin(graph, gamma)

    def _catalog(self, code: LinearCode, gamma: CostVector):
        masks = self.catalog_words.get(code)
        if masks is None:
            return None
        best_mask, best_cost = 0, 0.0
        for mask in masks:
            cost = 0.0
            m = mask
            while m:
                j = (m & -m).bit_length() - 1
                cost += gamma[j]
                m &= m - 1
            if cost < best_cost:
                best_mask, best_cost = mask, cost
        return Codeword.from_mask(best_mask, code.n), best_cost


def linmin_tree(
    t: DecompNode, gamma: CostVector, context: DecodeContext | None = None
) -> tuple[Codeword, float]:
    """Exact linear-cost minimization by recursion over a decomposition
    tree containing no plain 3-sum nodes.

    Direct-sum nodes split the cost vector.  A 2-sum node solves the first
    component twice with the overlap coordinate pinned to +M and -M, then
    the second component once with the overlap cost mu1 - mu0 + M; the
    winning word is assembled from whichever first-component minimizer
    matches the second's overlap bit.  A 3-bar-sum node does the same with
    the four even-weight overlap patterns 000, 011, 101, 110 and the
    half-difference costs of the lemma.  Node permutations pull the cost
    vector back before recursing and push the assembled word forward
    after.
    """
    if context is None:
        context = DecodeContext()
    for node in iter_nodes(t):
        if node.sum == "3sum":
            raise ContractError(
                "tree contains a 3-sum node; rebuild it 3-bar-homogeneous for decoding"
            )
    if len(gamma) != t.code.n:
        raise ContractError("cost vector length differs from code length")
    return _linmin_node(t, tuple(gamma), context)


def _linmin_node(
    node: DecompNode, gamma: tuple[float, ...], ctx: DecodeContext
) -> tuple[Codeword, float]:
    if node.is_leaf:
        return ctx.solve_leaf(node.code, gamma)

    assert node.left is not None and node.right is not None and node.perm is not None
    # cost of coordinate perm[i] lands on position i of the unpermuted sum
    pulled = tuple(gamma[node.perm[i] - 1] for i in range(len(gamma)))
    n1 = node.left.code.n
    n2 = node.right.code.n

    if node.sum == "direct":
        w1, mu1 = _linmin_node(node.left, pulled[:n1], ctx)
        w2, mu2 = _linmin_node(node.right, pulled[n1:], ctx)
        bits = w1.bits + w2.bits
        cost = mu1 + mu2
    elif node.sum == "2sum":
        bits, cost = _linmin_two_sum(node, pulled, n1, n2, ctx)
    elif node.sum == "3barsum":
        bits, cost = _linmin_three_bar(node, pulled, n1, n2, ctx)
    else:
        raise ContractError(f"cannot decode across a {node.sum!r} node")

    pushed = [0] * len(bits)
    for i, b in enumerate(bits):
        pushed[node.perm[i] - 1] = b
    return Codeword(tuple(pushed)), cost


def _linmin_two_sum(node, pulled, n1, n2, ctx):
    big = ctx.big_weight(pulled)
    prefix = pulled[: n1 - 1]
    minimizers = []
    costs = []
    for sign in (1.0, -1.0):
        word, mu = _linmin_node(node.left, prefix + (sign * big,), ctx)
        assert word.bits[-1] == (0 if sign > 0 else 1), "overlap forcing failed"
        minimizers.append(word)
        costs.append(mu)
    mu0, mu1 = costs
    beta = (mu1 - mu0 + big,) + pulled[n1 - 1 :]
    w2, mu_hat = _linmin_node(node.right, beta, ctx)
    chosen = minimizers[w2.bits[0]]
    bits = chosen.bits[:-1] + w2.bits[1:]
    return bits, mu0 + mu_hat


_OVERLAP_PATTERNS = ((0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0))


def _linmin_three_bar(node, pulled, n1, n2, ctx):
    big = ctx.big_weight(pulled)
    prefix = pulled[: n1 - 3]
    tail_signs = (
        (big, big, big),
        (big, -big, -big),
        (-big, big, -big),
        (-big, -big, big),
    )
    minimizers = []
    mu = []
    for j, tail in enumerate(tail_signs):
        word, cost = _linmin_node(node.left, prefix + tail, ctx)
        assert word.bits[-3:] == _OVERLAP_PATTERNS[j], "overlap forcing failed"
        minimizers.append(word)
        mu.append(cost)
    beta = (
        -(mu[0] + mu[1] - mu[2] - mu[3]) / 2 + big,
        -(mu[0] - mu[1] + mu[2] - mu[3]) / 2 + big,
        -(mu[0] - mu[1] - mu[2] + mu[3]) / 2 + big,
    ) + pulled[n1 - 3 :]
    w2, mu_hat = _linmin_node(node.right, beta, ctx)
    head = w2.bits[:3]
    chosen = minimizers[_OVERLAP_PATTERNS.index(head)]
    bits = chosen.bits[:-3] + w2.bits[3:]
    return bits, mu[0] + mu_hat


def min_distance(
    c: LinearCode,
    tree: DecompNode | None = None,
    context: DecodeContext | None = None,
) -> int:
    """Minimum distance through n linear minimizations.

    The i-th cost vector is all ones with -n at coordinate i, whose
    optimum picks out the lightest codeword through coordinate i; the
    distance is n + 1 plus the best optimum.  Uses the decomposition tree
    when given, brute force otherwise.  All quantities stay integral, so
    the float path is exact.
    """
    if c.k == 0:
        raise ContractError("zero code has no nonzero codeword")
    n = c.n
    best = math.inf
    for i in range(n):
        gamma = tuple(-float(n) if j == i else 1.0 for j in range(n))
        if tree is not None:
            _, cost = linmin_tree(tree, gamma, context)
        else:
            _, cost = linmin_bruteforce(c, gamma)
        best = min(best, cost)
    d = n + 1 + best
    rounded = round(d)
    assert abs(d - rounded) < COST_TOLERANCE
    assert rounded >= 1
    return int(rounded)


# -- channel spec file -----------------------------------------------------


def parse_channel_file(text: str) -> Channel:
    """Parse a channel spec: ``bsc p`` or ``table`` plus two likelihood
    rows (Pr[y|0] then Pr[y|1]) over the output alphabet."""
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not lines:
        raise ContractError("empty channel file")
    head = lines[0].split()
    if head[0] == "bsc":
        if len(head) != 2:
            raise ContractError("bsc spec needs exactly one probability")
        return Channel.bsc(float(head[1]))
    if head[0] == "table":
        if len(lines) != 3:
            raise ContractError("table spec needs two likelihood rows")
        row0 = tuple(float(x) for x in lines[1].split())
        row1 = tuple(float(x) for x in lines[2].split())
        return Channel(row0, row1)
    raise ContractError(f"unknown channel spec {head[0]!r}")
