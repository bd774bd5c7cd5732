import random

import pytest

from burnmat.laurent import Ring, parse_poly
from burnmat.matgroup import GroupWord, MatPoly, eval_word, parse_word, random_word, sample_subgroup_element
from burnmat.series import TruncSeries, coeff_sigma_floor, expand, min_order, u_matrix

R2 = Ring(2, False)


def mat(entries):
    return MatPoly(R2, [[parse_poly(e, R2) for e in row] for row in entries])


class TestUMatrix:
    def test_rank2_display(self):
        assert u_matrix(R2, 1) == mat([["1", "0"], ["-1", "0"]])

    def test_idempotent(self):
        for rank in (2, 3):
            ring = Ring(rank, False)
            for j in range(1, rank):
                u = u_matrix(ring, j)
                assert u * u == u


class TestExpansion:
    def test_generator_expansion(self):
        s = expand(GroupWord.gen(2, 1), 3)
        m2 = eval_word(GroupWord.gen(2, 1), with_t=False)
        u = u_matrix(R2, 1)
        assert s.coeffs[0] == m2
        assert s.coeffs[1] == m2 * u
        assert s.coeffs[2].is_zero() and s.coeffs[3].is_zero()

    def test_inverse_generator_expansion(self):
        s = expand(GroupWord.gen(2, 1, -1), 2)
        m2_inv = eval_word(GroupWord.gen(2, 1, -1), with_t=False)
        u = u_matrix(R2, 1)
        assert s.coeffs[0] == m2_inv
        assert s.coeffs[1] == -(u * m2_inv)
        assert s.coeffs[2] == u * m2_inv

    def test_empty_word(self):
        s = expand(GroupWord.identity(2), 5)
        assert s.is_identity()

    def test_m1_is_constant(self):
        s = expand(GroupWord.gen(2, 0, 3), 4)
        assert s.coeffs[0] == eval_word(GroupWord.gen(2, 0, 3), with_t=False)
        assert all(c.is_zero() for c in s.coeffs[1:])

    def test_truncation_coherence(self):
        rng = random.Random(4)
        for _ in range(10):
            w = random_word(2, rng, 8)
            big = expand(w, 7)
            small = expand(w, 4)
            assert big.truncate(4) == small

    def test_inverse_law(self):
        rng = random.Random(5)
        for _ in range(10):
            w = random_word(2, rng, 8)
            prod = expand(w, 5) * expand(w.inverse(), 5)
            assert prod.is_identity()

    def test_specialization_is_constant_term(self):
        rng = random.Random(6)
        for _ in range(10):
            w = random_word(2, rng, 8)
            assert eval_word(w, with_t=True).set_t_one() == expand(w, 3).coeffs[0]

    def test_rank3(self):
        w = parse_word("[ M3T3 , M2T2 ]", rank=3)
        s = expand(w, 3)
        assert s.coeffs[0].is_identity() or not s.coeffs[0].is_zero()
        prod = s * expand(w.inverse(), 3)
        assert prod.is_identity()


class TestMinOrder:
    def test_identity_word(self):
        assert min_order(expand(GroupWord.identity(2), 4)) is None

    def test_requires_identity_constant_term(self):
        with pytest.raises(ValueError):
            min_order(expand(GroupWord.gen(2, 0), 3))

    def test_second_derived_at_least_one(self):
        w = sample_subgroup_element("derived", 2, seed=3)
        assert min_order(expand(w, 6)) >= 1

    def test_third_derived_at_least_two(self):
        # d = 2^{k-2} = 2 for the third derived stratum
        for seed in range(3):
            w = sample_subgroup_element("derived", 3, seed=seed, base_len=1)
            mo = min_order(expand(w, 6))
            assert mo is None or mo >= 2


class TestSigmaFloors:
    def test_identity_word_empty(self):
        assert coeff_sigma_floor(expand(GroupWord.identity(2), 4)) == {}

    def test_commutator_floors_at_least_one(self):
        for seed in range(5):
            w = sample_subgroup_element("derived", 1, seed=seed)
            floors = coeff_sigma_floor(expand(w, 6))
            assert all(f >= 1 for f in floors.values())

    def test_second_derived_floors_at_least_two(self):
        for seed in range(5):
            w = sample_subgroup_element("derived", 2, seed=seed, base_len=2)
            s = expand(w, 6)
            assert s.coeffs[0].is_identity()
            floors = coeff_sigma_floor(s)
            assert all(f >= 2 for f in floors.values())

    def test_commutator_doubling(self):
        # [g, h] vanishes below 2 * min(d_g, d_h)
        g = sample_subgroup_element("derived", 2, seed=1, base_len=2)
        h = sample_subgroup_element("derived", 2, seed=2, base_len=2)
        dg = min_order(expand(g, 6))
        dh = min_order(expand(h, 6))
        comm = expand(g.commutator(h), 6)
        for i in range(1, min(2 * min(dg, dh), 7)):
            assert comm.coeffs[i].is_zero()


class TestTruncSeriesType:
    def test_multiplication_truncates(self):
        s = expand(GroupWord.gen(2, 1), 2)
        sq = s * s
        assert sq.trunc == 2
        direct = eval_word(GroupWord.gen(2, 1, 2), with_t=True)
        # compare against the t-expansion of the direct square
        ring_t = direct.ring
        tm1 = parse_poly("t-1", ring_t)
        total = MatPoly.zero(ring_t, 2)
        for i, c in enumerate(sq.coeffs):
            lifted = c.map_entries(lambda p: p.insert_t(ring_t))
            total = total + lifted * (tm1**i)
        assert total == direct

    def test_mismatched_truncation_rejected(self):
        with pytest.raises(ValueError):
            expand(GroupWord.gen(2, 1), 2) * expand(GroupWord.gen(2, 1), 3)
