"""Graphs, graphic codes, realization, and the T-join solver."""

import math
import random

import pytest

from seymour.catalog import catalog_code
from seymour.classify import equivalent
from seymour.codes import LinearCode, min_weight_bruteforce
from seymour.errors import ContractError, InputBoundError
from seymour.graphs import (
    Graph,
    code_from_graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    format_graph_file,
    girth,
    girth_stats,
    graphic_linmin,
    min_eulerian_subgraph,
    parse_graph_file,
    realize_graph,
    t_join,
    wagner_graph,
)
from seymour.mldecode import linmin_bruteforce

from util import random_connected_graph


def random_multigraph(rng, nv_hi=5, ne_hi=10):
    nv = rng.randint(2, nv_hi)
    ne = rng.randint(1, ne_hi)
    edges = tuple((rng.randint(1, nv), rng.randint(1, nv)) for _ in range(ne))
    return Graph(nv, edges)


def brute_min_tjoin(g, weights, terminals):
    best = None
    for mask in range(1 << g.n_edges):
        deg = [0] * (g.n_vertices + 1)
        cost = 0.0
        for j, (u, v) in enumerate(g.edges):
            if (mask >> j) & 1:
                cost += weights[j]
                if u != v:
                    deg[u] += 1
                    deg[v] += 1
        odd = {v for v in range(1, g.n_vertices + 1) if deg[v] % 2}
        if odd == set(terminals) and (best is None or cost < best):
            best = cost
    return best


def brute_min_eulerian(g, weights):
    return brute_min_tjoin(g, weights, set())


class TestCodeFromGraph:
    def test_cycle_gives_repetition(self):
        for n in (2, 3, 5, 8):
            code = code_from_graph(cycle_graph(n))
            assert (code.n, code.k) == (n, 1)
            assert min_weight_bruteforce(code) == n

    def test_k5_dual_is_the_published_code(self):
        code = code_from_graph(complete_graph(5))
        assert (code.n, code.k) == (10, 6)
        assert code.dual() == catalog_code("CK5D")

    def test_k33_dual_matches_published_code_up_to_edge_order(self):
        code = code_from_graph(complete_bipartite_graph(3, 3))
        assert (code.n, code.k) == (9, 4)
        assert equivalent(code.dual(), catalog_code("CK33D")) is not None

    def test_dimension_formula_with_components(self):
        rng = random.Random(71)
        for _ in range(50):
            g = random_multigraph(rng)
            code = code_from_graph(g)
            t = len(g.components())
            assert code.k == g.n_edges - g.n_vertices + t

    def test_codewords_are_even_degree_edge_sets(self):
        rng = random.Random(72)
        g = random_multigraph(rng, nv_hi=4, ne_hi=7)
        code = code_from_graph(g)
        for mask in range(1 << g.n_edges):
            deg = [0] * (g.n_vertices + 1)
            for j, (u, v) in enumerate(g.edges):
                if (mask >> j) & 1 and u != v:
                    deg[u] += 1
                    deg[v] += 1
            eulerian = all(d % 2 == 0 for d in deg)
            assert code.contains_mask(mask) == eulerian

    def test_no_edges_rejected(self):
        with pytest.raises(ContractError):
            code_from_graph(Graph(3, ()))


class TestGirthStats:
    def test_k5_has_girth_3(self):
        assert girth(complete_graph(5)) == 3

    def test_cycle_girth_matches_distance(self):
        for n in (3, 4, 7):
            g = cycle_graph(n)
            assert girth(g) == n == min_weight_bruteforce(code_from_graph(g))

    def test_loops_and_parallels(self):
        assert girth(Graph(2, ((1, 1), (1, 2)))) == 1
        assert girth(Graph(2, ((1, 2), (1, 2)))) == 2

    def test_forest_is_acyclic(self):
        stats = girth_stats(Graph(3, ((1, 2), (2, 3))))
        assert stats.girth == math.inf
        assert stats.moore_bound_ok is None

    def test_distance_equals_girth_on_connected_graphs(self):
        rng = random.Random(73)
        for _ in range(40):
            g = random_connected_graph(rng, rng.randint(3, 6), rng.randint(1, 5))
            code = code_from_graph(g)
            if code.k == 0:
                continue
            assert min_weight_bruteforce(code) == girth(g)

    def test_rate_bound_on_random_graphs(self):
        # the published bound d <= 4 log n / log(1 + r/2) for rate > r
        rng = random.Random(74)
        done = 0
        while done < 100:
            nv = rng.randint(4, 9)
            g = random_connected_graph(rng, nv, rng.randint(nv, 3 * nv))
            code = code_from_graph(g)
            if code.k / code.n <= 0.3:
                continue
            stats = girth_stats(g, rate_threshold=0.3)
            assert stats.rate_bound_ok is True
            if stats.moore_bound_ok is not None:
                assert stats.moore_bound_ok
            done += 1

    def test_wagner_graph_girth(self):
        assert girth(wagner_graph()) == 4


class TestRealizeGraph:
    def test_repetition_realizes_as_cycle(self):
        rep = LinearCode.from_generator([(1 << 5) - 1], 5)
        g = realize_graph(rep)
        assert g is not None
        assert code_from_graph(g) == rep
        assert girth(g) == 5

    def test_hamming_is_not_graphic(self, simplex):
        assert realize_graph(simplex.dual()) is None

    def test_simplex_is_not_graphic(self, simplex):
        assert realize_graph(simplex) is None

    def test_round_trip_on_random_graphs(self):
        rng = random.Random(75)
        done = 0
        while done < 50:
            g = random_multigraph(rng, nv_hi=5, ne_hi=8)
            code = code_from_graph(g)
            realized = realize_graph(code)
            assert realized is not None
            assert code_from_graph(realized) == code
            done += 1

    def test_loops_survive(self):
        g = Graph(2, ((1, 1), (1, 2), (1, 2)))
        code = code_from_graph(g)
        realized = realize_graph(code)
        assert realized is not None and code_from_graph(realized) == code

    def test_bound_refusal(self):
        rng = random.Random(76)
        big = LinearCode.from_generator([rng.getrandbits(20) for _ in range(4)], 20)
        with pytest.raises(InputBoundError):
            realize_graph(big)


class TestTJoin:
    def test_path_endpoints(self):
        g = Graph(3, ((1, 2), (2, 3)))
        join = t_join(g, (1.0, 1.0), {1, 3})
        assert join.indices == (1, 2)

    def test_empty_terminals(self):
        g = Graph(3, ((1, 2), (2, 3)))
        assert t_join(g, (1.0, 1.0), set()).indices == ()

    def test_odd_terminals_rejected(self):
        g = Graph(3, ((1, 2), (2, 3)))
        with pytest.raises(ContractError):
            t_join(g, (1.0, 1.0), {1})

    def test_infeasible_components_rejected(self):
        g = Graph(4, ((1, 2), (3, 4)))
        with pytest.raises(ContractError):
            t_join(g, (1.0, 1.0), {1, 3})

    def test_negative_weights_rejected(self):
        g = Graph(2, ((1, 2),))
        with pytest.raises(ContractError):
            t_join(g, (-1.0,), set())

    def test_matches_bruteforce(self):
        rng = random.Random(77)
        done = 0
        while done < 200:
            g = random_multigraph(rng, nv_hi=5, ne_hi=10)
            weights = [rng.randint(0, 9) for _ in range(g.n_edges)]
            terminals = set()
            for comp in g.components():
                comp = sorted(comp)
                take = rng.randint(0, len(comp) // 2) * 2
                terminals |= set(rng.sample(comp, take))
            join = t_join(g, weights, terminals)
            cost = sum(weights[j - 1] for j in join.indices)
            assert cost == brute_min_tjoin(g, weights, terminals)
            # parity postcondition
            deg = [0] * (g.n_vertices + 1)
            for j, (u, v) in enumerate(g.edges):
                if j + 1 in join.indices and u != v:
                    deg[u] += 1
                    deg[v] += 1
            assert {v for v in range(1, g.n_vertices + 1) if deg[v] % 2} == terminals
            done += 1


class TestMinEulerian:
    def test_triangle_positive(self):
        tri = Graph(3, ((1, 2), (2, 3), (1, 3)))
        assert min_eulerian_subgraph(tri, (1, 1, 1)).indices == ()

    def test_triangle_negative(self):
        tri = Graph(3, ((1, 2), (2, 3), (1, 3)))
        best = min_eulerian_subgraph(tri, (-1, -1, -1))
        assert best.indices == (1, 2, 3)

    def test_matches_bruteforce(self):
        rng = random.Random(78)
        done = 0
        while done < 200:
            g = random_multigraph(rng, nv_hi=5, ne_hi=12)
            weights = [rng.randint(-6, 6) for _ in range(g.n_edges)]
            best = min_eulerian_subgraph(g, weights)
            cost = sum(weights[j - 1] for j in best.indices)
            assert cost == brute_min_eulerian(g, weights)
            assert cost <= 0
            done += 1


class TestGraphicLinmin:
    def test_all_positive_gives_zero_word(self):
        g = complete_graph(4)
        word, cost = graphic_linmin(g, [1.0] * g.n_edges)
        assert cost == 0 and word.weight == 0

    def test_cycle_all_negative_gives_all_ones(self):
        g = cycle_graph(6)
        word, cost = graphic_linmin(g, [-1.0] * 6)
        assert word.weight == 6 and cost == -6

    def test_matches_bruteforce_oracle(self):
        rng = random.Random(79)
        done = 0
        while done < 200:
            g = random_multigraph(rng, nv_hi=5, ne_hi=9)
            gamma = [rng.randint(-5, 5) for _ in range(g.n_edges)]
            code = code_from_graph(g)
            word, cost = graphic_linmin(g, gamma)
            _, expected = linmin_bruteforce(code, [float(x) for x in gamma])
            assert cost == expected
            assert code.contains(word)
            done += 1

    def test_length_mismatch(self):
        with pytest.raises(ContractError):
            graphic_linmin(cycle_graph(3), [1.0, 2.0])


class TestGraphFile:
    def test_round_trip(self):
        g = Graph(4, ((1, 2), (2, 3), (3, 4), (1, 4)), (1.0, 2.0, 0.5, 3.0))
        again = parse_graph_file(format_graph_file(g))
        assert again == g

    def test_unweighted(self):
        g = parse_graph_file("3 2\n1 2\n2 3\n")
        assert g.edges == ((1, 2), (2, 3)) and g.weights is None

    def test_bad_header(self):
        with pytest.raises(ContractError):
            parse_graph_file("3\n")
