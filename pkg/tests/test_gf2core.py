"""Core GF(2) code algebra: rref, duals, minors, weights, equality."""

import random

import pytest

from seymour.codes import (
    Codeword,
    LinearCode,
    direct_sum,
    equal,
    format_code_file,
    min_weight_bruteforce,
    minimal_codewords,
    parse_code_file,
    weight_enumerator,
)
from seymour.errors import ContractError, InputBoundError
from seymour.gf2 import BitMatrix

from util import all_words_oracle, codes_equal_oracle, dense_rank, random_code


class TestRref:
    def test_identity_is_fixed(self):
        m = BitMatrix.from_strings(["100", "010", "001"])
        reduced, pivots, rank = m.rref()
        assert reduced == m
        assert pivots == (1, 2, 3)
        assert rank == 3

    def test_simplex_generator_already_reduced(self, simplex):
        m = BitMatrix.from_strings(["1000111", "0101011", "0011101"])
        reduced, pivots, rank = m.rref()
        assert reduced == m
        assert rank == 3

    def test_all_zero_matrix(self):
        m = BitMatrix.from_strings(["0000", "0000"])
        reduced, pivots, rank = m.rref()
        assert reduced == m
        assert pivots == ()
        assert rank == 0

    def test_row_space_preserved_on_random_matrices(self):
        rng = random.Random(101)
        for _ in range(50):
            n = rng.randint(1, 10)
            rows = [rng.getrandbits(n) for _ in range(rng.randint(0, 6))]
            c1 = LinearCode.from_generator(rows, n)
            reduced, _ = __import__("seymour.gf2", fromlist=["rref"]).rref(rows, n)
            c2 = LinearCode.from_generator(list(reduced), n)
            assert codes_equal_oracle(c1, c2)


class TestDual:
    def test_hamming_dual_is_simplex(self, simplex, hamming_g):
        # the duals are equivalent codes; for the simplex generator the
        # dual is bit-for-bit the [7,4] Hamming code in the same ordering
        h7 = simplex.dual()
        assert (h7.n, h7.k) == (7, 4)
        assert min_weight_bruteforce(h7) == 3
        assert h7.dual() == simplex

    def test_full_space_dual_is_zero_code(self):
        full = LinearCode.from_generator([1, 2, 4], 3)
        zero = full.dual()
        assert zero.k == 0
        assert zero.n == 3

    def test_dual_involution_on_random_codes(self):
        rng = random.Random(7)
        for _ in range(100):
            c = random_code(rng, rng.randint(1, 12))
            assert codes_equal_oracle(c.dual().dual(), c)
            assert c.dual().dual() == c

    def test_orthogonality(self):
        rng = random.Random(8)
        for _ in range(30):
            c = random_code(rng, rng.randint(1, 12))
            for g in c.gen.rows:
                for h in c.par.rows:
                    assert (g & h).bit_count() % 2 == 0
            assert c.gen.rank() + c.par.rank() == c.n


class TestMinor:
    def test_paper_minor_recovers_simplex(self, code_12_5, simplex):
        minor = code_12_5.minor(punctured={9, 11, 12}, shortened={7, 8})
        assert minor == simplex

    def test_empty_minor_is_identity(self, simplex):
        assert simplex.minor() == simplex

    def test_puncturing_extended_hamming_gives_743(self, ext_hamming8):
        for j in range(1, 9):
            punctured = ext_hamming8.puncture({j})
            assert (punctured.n, punctured.k) == (7, 4)
            assert min_weight_bruteforce(punctured) == 3

    def test_order_of_operations_is_irrelevant(self):
        rng = random.Random(9)
        for _ in range(60):
            n = rng.randint(2, 10)
            c = random_code(rng, n)
            coords = list(range(1, n + 1))
            rng.shuffle(coords)
            cut = rng.randint(0, min(3, n - 1))
            cut2 = rng.randint(0, min(3, n - 1 - cut))
            x = set(coords[:cut])
            y = set(coords[cut : cut + cut2])
            via_minor = c.minor(punctured=x, shortened=y)
            # puncture first, then shorten at the renumbered positions
            punctured = c.puncture(x)
            survivors = [j for j in range(1, n + 1) if j not in x]
            remap = {j: t + 1 for t, j in enumerate(survivors)}
            other = punctured.shorten({remap[j] for j in y})
            assert equal(via_minor, other)

    def test_minor_identity_with_dual(self):
        # shortening is puncturing of the dual, dualized back
        rng = random.Random(10)
        for _ in range(60):
            n = rng.randint(2, 12)
            c = random_code(rng, n)
            j = {rng.randint(1, n)}
            assert c.shorten(j) == c.dual().puncture(j).dual()

    def test_overlap_rejected(self, simplex):
        with pytest.raises(ContractError):
            simplex.minor(punctured={1}, shortened={1})


class TestRestrict:
    def test_simplex_restrictions(self, simplex):
        assert simplex.restrict({1, 2, 3, 7}).k == 3
        assert simplex.restrict({4, 5, 6}).k == 2
        assert simplex.restrict(range(1, 8)) == simplex

    def test_restriction_dim_matches_dense_rank(self):
        rng = random.Random(11)
        for _ in range(60):
            n = rng.randint(1, 12)
            c = random_code(rng, n)
            coords = sorted(
                rng.sample(range(1, n + 1), rng.randint(0, n))
            )
            dim = c.restriction_dim(coords)
            rows = [[c.gen.entry(i + 1, j) for j in coords] for i in range(c.k)]
            expected = dense_rank(rows) if coords else 0
            assert dim == expected


class TestMinWeight:
    def test_hamming_distance_3(self, simplex):
        assert min_weight_bruteforce(simplex.dual()) == 3

    def test_repetition(self):
        for n in (1, 2, 5, 9):
            rep = LinearCode.from_generator([(1 << n) - 1], n)
            assert min_weight_bruteforce(rep) == n

    def test_r10_distance(self):
        from seymour.catalog import catalog_code

        assert min_weight_bruteforce(catalog_code("R10")) == 4

    def test_zero_code_rejected(self):
        zero = LinearCode.from_generator([], 4)
        with pytest.raises(ContractError):
            min_weight_bruteforce(zero)

    def test_bound_refusal(self):
        rng = random.Random(12)
        c = random_code(rng, 10, 10)
        if c.k >= 4:
            with pytest.raises(InputBoundError):
                min_weight_bruteforce(c, bound=4)


class TestMinimalCodewords:
    def test_repetition_has_single_minimal_word(self):
        rep = LinearCode.from_generator([0b11111], 5)
        words = minimal_codewords(rep)
        assert [w.bits for w in words] == [(1, 1, 1, 1, 1)]

    def test_hamming_minimal_words_against_oracle(self, simplex):
        h7 = simplex.dual()
        words = minimal_codewords(h7)
        # independent oracle: support containment over the dense word list
        dense = [w for w in all_words_oracle(h7) if any(w)]

        def contains(a, b):  # supp(b) subseteq supp(a)
            return all(x >= y for x, y in zip(a, b))

        expected = [
            w for w in dense if not any(contains(w, u) for u in dense if u != w)
        ]
        assert sorted(w.bits for w in words) == sorted(expected)
        weights = sorted(w.weight for w in words)
        assert weights == [3] * 7 + [4] * 7

    def test_zero_code_has_none(self):
        assert minimal_codewords(LinearCode.from_generator([], 3)) == []


class TestDirectSum:
    def test_zero_length_neutral(self, simplex):
        empty = LinearCode.from_generator([], 0)
        assert direct_sum(simplex, empty) == simplex

    def test_dimension_additivity(self):
        rng = random.Random(13)
        for _ in range(100):
            c1 = random_code(rng, rng.randint(0, 8))
            c2 = random_code(rng, rng.randint(0, 8))
            s = direct_sum(c1, c2)
            assert s.n == c1.n + c2.n
            assert s.k == c1.k + c2.k
            rows = [
                [int(b) for b in r] for r in c1.gen.to_strings()
            ] + [[0] * c1.n + [int(b) for b in r] for r in c2.gen.to_strings()]
            rows = [r + [0] * (s.n - len(r)) for r in rows]
            assert dense_rank(rows) == s.k if rows else s.k == 0

    def test_distance_is_minimum(self):
        rng = random.Random(14)
        done = 0
        while done < 30:
            c1 = random_code(rng, rng.randint(2, 6))
            c2 = random_code(rng, rng.randint(2, 6))
            if c1.k == 0 or c2.k == 0:
                continue
            s = direct_sum(c1, c2)
            assert min_weight_bruteforce(s) == min(
                min_weight_bruteforce(c1), min_weight_bruteforce(c2)
            )
            done += 1


class TestPermute:
    def test_identity(self, simplex):
        assert simplex.permute(tuple(range(1, 8))) == simplex

    def test_inverse_round_trip(self):
        rng = random.Random(15)
        for _ in range(50):
            n = rng.randint(1, 10)
            c = random_code(rng, n)
            pi = list(range(1, n + 1))
            rng.shuffle(pi)
            inv = [0] * n
            for i, image in enumerate(pi):
                inv[image - 1] = i + 1
            assert c.permute(pi).permute(inv) == c

    def test_weight_enumerator_invariant(self):
        rng = random.Random(16)
        for _ in range(50):
            n = rng.randint(1, 10)
            c = random_code(rng, n)
            pi = list(range(1, n + 1))
            rng.shuffle(pi)
            assert weight_enumerator(c.permute(pi)) == weight_enumerator(c)

    def test_non_bijection_rejected(self, simplex):
        with pytest.raises(ContractError):
            simplex.permute((1, 1, 2, 3, 4, 5, 6))


class TestEquality:
    def test_row_operations_do_not_matter(self, hamming_g):
        rows = list(hamming_g.gen.rows)
        mixed = [rows[0] ^ rows[1], rows[1], rows[2] ^ rows[0] ^ rows[3], rows[3]]
        assert LinearCode.from_generator(mixed, 7) == hamming_g

    def test_different_dimensions_differ(self, simplex, hamming_g):
        assert simplex != hamming_g

    def test_coordinate_swap_detected(self):
        rng = random.Random(17)
        hits = 0
        for _ in range(80):
            n = rng.randint(2, 9)
            c = random_code(rng, n)
            i, j = rng.sample(range(1, n + 1), 2)
            pi = list(range(1, n + 1))
            pi[i - 1], pi[j - 1] = pi[j - 1], pi[i - 1]
            swapped = c.permute(pi)
            assert (swapped == c) == codes_equal_oracle(swapped, c)
            if swapped != c:
                hits += 1
        assert hits > 10  # most random codes are not swap-invariant


class TestInvariants:
    def test_defect_nonnegative(self):
        from seymour.connectivity import defect

        rng = random.Random(18)
        for _ in range(80):
            n = rng.randint(1, 12)
            c = random_code(rng, n)
            coords = set(rng.sample(range(1, n + 1), rng.randint(0, n)))
            assert defect(c, coords) >= 0

    def test_shorten_equals_dual_identity_all_j(self):
        # C \ J = (C^perp / J)^perp over every singleton and random J
        rng = random.Random(19)
        for _ in range(40):
            n = rng.randint(2, 10)
            c = random_code(rng, n)
            j = set(rng.sample(range(1, n + 1), rng.randint(1, n - 1)))
            assert c.shorten(j) == c.dual().puncture(j).dual()

    def test_rank_decomposition_after_operations(self):
        rng = random.Random(20)
        for _ in range(40):
            n = rng.randint(2, 10)
            c = random_code(rng, n)
            for derived in (c.dual(), c.puncture({1}), c.shorten({n})):
                assert derived.gen.rank() == derived.k
                assert derived.par.rank() == derived.n - derived.k
                for g in derived.gen.rows:
                    for h in derived.par.rows:
                        assert (g & h).bit_count() % 2 == 0


class TestCodeFileFormat:
    def test_round_trip(self, code_12_5):
        text = format_code_file(code_12_5)
        assert parse_code_file(text) == code_12_5

    def test_parity_mode(self, simplex):
        h7 = simplex.dual()
        rows = "\n".join(h7.par.to_strings())
        text = f"# parity\n{h7.n - h7.k} {h7.n}\n{rows}\n"
        assert parse_code_file(text) == h7

    def test_comments_and_whitespace(self):
        text = "# a comment\n2 4\n1 0 1 0\n0 1 1 1\n# trailing\n"
        c = parse_code_file(text)
        assert (c.n, c.k) == (4, 2)

    def test_bad_header_rejected(self):
        with pytest.raises(ContractError):
            parse_code_file("oops\n")


def test_codeword_weight_cached():
    w = Codeword((1, 0, 1, 1))
    assert w.weight == 3
    assert w.support == (1, 3, 4)
    assert Codeword.from_mask(w.to_mask(), 4) == w
