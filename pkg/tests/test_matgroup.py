import math
import random

import pytest

from burnmat.laurent import LaurentPoly, Ring, parse_poly
from burnmat.matgroup import (
    GroupWord,
    MatPoly,
    basic_commutator_lambda,
    basic_commutator_word,
    determinant_unit,
    eval_word,
    exponent_sums,
    fast_power,
    fixed_row_vector,
    format_word,
    generator_names,
    make_generators,
    normal_form,
    parse_word,
    random_word,
    row_times_matrix,
    sample_subgroup_element,
)

R2 = Ring(2, False)
R2T = Ring(2, True)


def poly(text, ring=R2):
    return parse_poly(text, ring)


def mat(entries, ring=R2):
    return MatPoly(ring, [[poly(e, ring) for e in row] for row in entries])


class TestGenerators:
    def test_rank2_displays(self):
        m1, m2 = make_generators(2, with_t=False)
        assert m1 == mat([["1", "1-y"], ["0", "x"]])
        assert m2 == mat([["y", "0"], ["1-x", "1"]])

    def test_rank2_with_t(self):
        g1, g2t = make_generators(2, with_t=True)
        assert g2t == mat([["y*t", "0"], ["1-x*t", "1"]], R2T)
        assert g1 == mat([["1", "1-y"], ["0", "x"]], R2T)

    def test_rank3_t_matrices_commute(self):
        # gp<T_2, ..., T_k> is free abelian, so the T parts commute
        from burnmat.matgroup import _t_matrix

        ring = Ring(3, True)
        t2 = _t_matrix(ring, 1)
        t3 = _t_matrix(ring, 2)
        assert t2 * t3 == t3 * t2

    def test_rejects_rank_below_two(self):
        with pytest.raises(ValueError):
            make_generators(1, with_t=False)

    def test_names(self):
        assert generator_names(2, True) == ["M1", "M2T"]
        assert generator_names(3, True) == ["M1", "M2T2", "M3T3"]
        assert generator_names(3, False) == ["M1", "M2", "M3"]


class TestWords:
    def test_empty_word_is_identity(self):
        assert eval_word(GroupWord.identity(2), with_t=True).is_identity()

    def test_free_reduction(self):
        g = GroupWord.gen(2, 1)
        assert (g * g.inverse()).is_identity()
        w = parse_word("M2T M2T^-1")
        assert w.is_identity()

    def test_sanov_specialization(self):
        m = eval_word(GroupWord.gen(2, 0), with_t=True)
        assert m.evaluate_int({"x": 1, "y": -1, "t": -1}) == ((1, 2), (0, 1))

    def test_parse_word_letters(self):
        w = parse_word("M1 M2T^3 M1^-1")
        assert w.letters == ((0, 1), (1, 3), (0, -1))

    def test_parse_word_brackets(self):
        w = parse_word("[ M2T , M1 ]")
        assert w == GroupWord.gen(2, 1).commutator(GroupWord.gen(2, 0))
        nested = parse_word("[ [ M2T , M1 ] , M1 ]")
        assert nested == w.commutator(GroupWord.gen(2, 0))

    def test_parse_rank3(self):
        w = parse_word("M3T3 M1^-2", rank=3)
        assert w.letters == ((2, 1), (0, -2))

    def test_parse_rejects_unknown(self):
        with pytest.raises(ValueError):
            parse_word("M5")
        with pytest.raises(ValueError):
            parse_word("[ M1 ]")

    def test_format_roundtrip(self):
        rng = random.Random(3)
        for _ in range(20):
            w = random_word(2, rng, 10)
            assert parse_word(format_word(w)) == w


class TestNormalForm:
    def test_generator_forms(self):
        m1, m2 = make_generators(2, with_t=False)
        nf1 = normal_form(m1)
        assert nf1.u == poly("x") and nf1.lambdas == (poly("1"), poly("0"))
        nf2 = normal_form(m2)
        assert nf2.u == poly("y") and nf2.lambdas == (poly("0"), poly("1"))

    def test_commutator_lambdas(self):
        w = GroupWord.gen(2, 1).commutator(GroupWord.gen(2, 0))
        nf = normal_form(eval_word(w, with_t=False))
        assert nf.u == poly("1")
        assert nf.lambdas == (poly("-1+y"), poly("1-x"))

    def test_identity(self):
        nf = normal_form(MatPoly.identity(R2, 2))
        assert nf.u == poly("1") and nf.lambdas == (poly("0"), poly("0"))

    def test_rejects_non_member_shapes(self):
        with pytest.raises(ValueError):
            normal_form(mat([["1", "1"], ["0", "1"]]))
        with pytest.raises(ValueError):
            normal_form(mat([["2", "0"], ["0", "2"]]))

    def test_invariants_on_random_words(self):
        rng = random.Random(0)
        v = fixed_row_vector(R2)
        for _ in range(40):
            w = random_word(2, rng, 10)
            m = eval_word(w, with_t=False)
            nf = normal_form(m)
            assert nf.to_matrix() == m
            assert nf.constraint_holds()
            assert row_times_matrix(v, m) == v
            n_mat = m - nf.u * MatPoly.identity(R2, 2)
            assert n_mat * n_mat == (LaurentPoly.one(R2) - nf.u) * n_mat

    def test_rank3_invariants(self):
        ring = Ring(3, False)
        rng = random.Random(1)
        v = fixed_row_vector(ring)
        for _ in range(10):
            w = random_word(3, rng, 6)
            m = eval_word(w, rank=3, with_t=False)
            nf = normal_form(m)
            assert nf.to_matrix() == m
            assert nf.constraint_holds()
            assert row_times_matrix(v, m) == v


class TestFastPower:
    def test_square_of_m1(self):
        m1, _ = make_generators(2, with_t=False)
        nf = fast_power(normal_form(m1), 2)
        assert nf.u == poly("x^2")
        assert nf.lambdas == (poly("1+x"), poly("0"))
        assert nf.to_matrix() == m1 * m1

    def test_power_one_is_identity_map(self):
        m1, _ = make_generators(2, with_t=False)
        nf = normal_form(m1)
        got = fast_power(nf, 1)
        assert got.u == nf.u and got.lambdas == nf.lambdas

    def test_commutator_power_multiplies_lambdas(self):
        w = GroupWord.gen(2, 1).commutator(GroupWord.gen(2, 0))
        nf = normal_form(eval_word(w, with_t=False))
        got = fast_power(nf, 5)
        assert got.u == poly("1")
        assert got.lambdas == tuple(5 * l for l in nf.lambdas)

    def test_matches_direct_exponentiation(self):
        rng = random.Random(2)
        for _ in range(15):
            w = random_word(2, rng, 8)
            m = eval_word(w, with_t=False)
            nf = normal_form(m)
            for n in (2, 3, 5, 8):
                assert fast_power(nf, n).to_matrix() == m**n


class TestBasicCommutators:
    def test_first_case(self):
        assert basic_commutator_lambda(0, 0) == (poly("-1+y"), poly("1-x"))

    def test_a1_b0_against_word(self):
        lam = basic_commutator_lambda(1, 0)
        w = basic_commutator_word(1, 0)
        assert w == parse_word("[ [ M2T , M1 ] , M1 ]")
        nf = normal_form(eval_word(w, with_t=False))
        assert nf.lambdas == lam

    def test_grid_against_words(self):
        for a in range(3):
            for b in range(3):
                lam = basic_commutator_lambda(a, b)
                nf = normal_form(eval_word(basic_commutator_word(a, b), with_t=False))
                assert nf.u == poly("1")
                assert nf.lambdas == lam
                assert all(l.sigma_degree() == a + b + 1 for l in lam)


class TestExponentSums:
    def test_t_sum_of_powers(self):
        sums, t_sum = exponent_sums(GroupWord.gen(2, 1) ** 3)
        assert t_sum == 3 and sums == {0: 0, 1: 3}

    def test_commutator_sums_vanish(self):
        rng = random.Random(5)
        for _ in range(10):
            a = random_word(2, rng, 6)
            b = random_word(2, rng, 6)
            sums, t_sum = exponent_sums(a.commutator(b))
            assert t_sum == 0 and all(v == 0 for v in sums.values())

    def test_m1_powers(self):
        sums, t_sum = exponent_sums(GroupWord.gen(2, 0) ** 4)
        assert t_sum == 0 and sums[0] == 4


class TestDeterminant:
    def test_generator_determinants(self):
        m1, _ = make_generators(2, with_t=False)
        _, g2t = make_generators(2, with_t=True)
        assert determinant_unit(m1) == poly("x")
        assert determinant_unit(g2t) == poly("y*t", R2T)

    def test_commutators_have_unit_determinant(self):
        w = parse_word("[ M2T , M1 ]")
        assert determinant_unit(eval_word(w, with_t=True)) == poly("1", R2T)

    def test_t_exponent_tracks_t_sum(self):
        rng = random.Random(9)
        for _ in range(20):
            w = random_word(2, rng, 8)
            _, t_sum = exponent_sums(w)
            det = determinant_unit(eval_word(w, with_t=True))
            _, exps = det.unit_parts()
            assert exps[-1] == t_sum


class TestSamplers:
    def test_deterministic_per_seed(self):
        a = sample_subgroup_element("derived", 2, seed=11)
        b = sample_subgroup_element("derived", 2, seed=11)
        assert a == b
        assert a != sample_subgroup_element("derived", 2, seed=12)

    def test_derived_one_kills_exponent_sums(self):
        for seed in range(5):
            w = sample_subgroup_element("derived", 1, seed=seed)
            sums, t_sum = exponent_sums(w)
            assert t_sum == 0 and all(v == 0 for v in sums.values())

    def test_derived_two_has_trivial_unit(self):
        w = sample_subgroup_element("derived", 2, seed=0)
        nf = normal_form(eval_word(w, with_t=False))
        assert nf.u == poly("1")

    def test_lower_central_floor(self):
        # depth-j samples have lambda sigma-degree >= j-1 and entries of
        # M - I with sigma-degree >= j-1
        for j in (2, 3):
            for seed in range(4):
                w = sample_subgroup_element("lower_central", j, seed=seed, base_len=2)
                m = eval_word(w, with_t=False)
                nf = normal_form(m)
                assert min(l.sigma_degree() for l in nf.lambdas) >= j - 1
                diff = m - MatPoly.identity(R2, 2)
                assert (
                    min(p.sigma_degree() for r in diff.rows for p in r) >= j - 1
                )

    def test_sanov_freeness_spot_check(self):
        rng = random.Random(0)
        ident = ((1, 0), (0, 1))
        for _ in range(100):
            w = random_word(2, rng, 12)
            m = eval_word(w, with_t=True)
            assert m.evaluate_int({"x": 1, "y": -1, "t": -1}) != ident
