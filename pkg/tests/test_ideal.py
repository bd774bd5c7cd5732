import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from burnmat.ideal import (
    CYCLOTOMIC,
    CYCLOTOMIC_TIMES_SIGMA,
    PROVED,
    REFUTED,
    SIGMA_POWER,
    UNKNOWN,
    Budget,
    Certificate,
    IdealSpec,
    constructive_certificate,
    decide,
    find_certificate,
    find_obstruction,
    generators,
    replay_verdict,
    sigma_power_parts,
    verdict_to_json,
)
from burnmat.laurent import LaurentPoly, Ring, format_poly, parse_poly

R1 = Ring(1, False)
R2 = Ring(2, False)


def poly2(text):
    return parse_poly(text, R2)


def expand_parts(target, parts):
    total = LaurentPoly.zero(target.ring)
    for g, m in parts:
        total = total + g * m
    return total


class TestGenerators:
    def test_sigma_power_rank2(self):
        spec = IdealSpec(SIGMA_POWER, 1, window=0, rank=2)
        assert [format_poly(g) for g in generators(spec)] == ["1 - x", "1 - y"]

    def test_cyclotomic_rank1_window1(self):
        spec = IdealSpec(CYCLOTOMIC, 2, window=1, rank=1)
        got = [format_poly(g) for g in generators(spec)]
        assert got == ["2", "1 + x", "x^-1 + 1"]

    def test_cyclotomic_includes_three_term_sum(self):
        spec = IdealSpec(CYCLOTOMIC, 3, window=1, rank=1)
        assert parse_poly("1+x+x^2", R1) in generators(spec)

    def test_generator_counts(self):
        spec = IdealSpec(CYCLOTOMIC, 3, window=2, rank=2)
        assert len(generators(spec)) == 25
        spec_s = IdealSpec(CYCLOTOMIC_TIMES_SIGMA, 3, window=2, rank=2)
        assert len(generators(spec_s)) == 50

    def test_deterministic(self):
        spec = IdealSpec(CYCLOTOMIC_TIMES_SIGMA, 4, window=2, rank=2)
        assert generators(spec) == generators(spec)

    def test_every_generator_has_zero_augmentation_in_sigma_kind(self):
        spec = IdealSpec(CYCLOTOMIC_TIMES_SIGMA, 3, window=1, rank=2)
        assert all(g.augmentation() == 0 for g in generators(spec))

    def test_rejects_composite_exponent(self):
        with pytest.raises(ValueError):
            IdealSpec(CYCLOTOMIC, 6, window=1, rank=2)


class TestFindCertificate:
    def test_one_minus_x_in_I2(self):
        spec = IdealSpec(CYCLOTOMIC, 2, window=1, rank=1)
        target = parse_poly("1-x", R1)
        v = find_certificate(target, spec, box=2)
        assert v.status == PROVED
        assert expand_parts(target, v.certificate.parts) == target

    def test_one_minus_x_squared_in_I3(self):
        spec = IdealSpec(CYCLOTOMIC, 3, window=1, rank=1)
        target = parse_poly("1-2*x+x^2", R1)
        v = find_certificate(target, spec, box=2)
        assert v.status == PROVED

    def test_zero_target(self):
        spec = IdealSpec(CYCLOTOMIC, 3, window=1, rank=2)
        v = find_certificate(LaurentPoly.zero(R2), spec, box=1)
        assert v.status == PROVED and v.certificate.parts == ()

    def test_never_refutes(self):
        spec = IdealSpec(CYCLOTOMIC, 3, window=1, rank=2)
        v = find_certificate(poly2("1-x"), spec, box=1)
        assert v.status == UNKNOWN
        assert v.bounds["folded_member"] is False

    def test_rejects_t_bearing_targets(self):
        spec = IdealSpec(CYCLOTOMIC, 3, window=1, rank=2)
        with pytest.raises(ValueError):
            find_certificate(parse_poly("t-1", Ring(2, True)), spec, box=1)

    def test_sigma_power_search(self):
        spec = IdealSpec(SIGMA_POWER, 2, window=0, rank=2)
        target = poly2("1-x") * poly2("1-y")
        v = find_certificate(target, spec, box=1)
        assert v.status == PROVED


class TestFindObstruction:
    def test_one_minus_x_not_in_I3(self):
        spec = IdealSpec(CYCLOTOMIC, 3, window=2, rank=2)
        v = find_obstruction(poly2("1-x"), spec)
        assert v.status == REFUTED
        assert v.obstruction.hom == {"roots": {"q": 3, "powers": {"x": 1, "y": 0}}}
        assert tuple(v.obstruction.value) == (1, -1)

    def test_constant_one_refuted_by_augmentation(self):
        for q in (2, 3, 4):
            spec = IdealSpec(CYCLOTOMIC_TIMES_SIGMA, q, window=1, rank=2)
            v = find_obstruction(LaurentPoly.one(R2), spec)
            assert v.status == REFUTED
            assert v.obstruction.hom == {"augmentation": True}

    def test_x_minus_one_not_in_I3_sigma(self):
        # needed so the first generator has order exactly 3, not 1
        spec = IdealSpec(CYCLOTOMIC_TIMES_SIGMA, 3, window=2, rank=2)
        v = find_obstruction(poly2("x-1"), spec)
        assert v.status == REFUTED

    def test_never_proves(self):
        spec = IdealSpec(CYCLOTOMIC, 2, window=1, rank=2)
        v = find_obstruction(poly2("2"), spec)
        assert v.status == UNKNOWN

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
    def test_soundness_generators_map_into_admissible_set(self, q):
        # every truncated generator image must be divisible by q under all
        # root assignments, and have augmentation 0 for the sigma kind
        window = 2
        spec = IdealSpec(CYCLOTOMIC, q, window=window, rank=2)
        for g in generators(spec):
            for ax in range(q):
                for ay in range(q):
                    img = g.eval_at_root_powers(q, {"x": ax, "y": ay})
                    assert img.divisible_by(q)
        spec_s = IdealSpec(CYCLOTOMIC_TIMES_SIGMA, q, window=window, rank=2)
        for g in generators(spec_s):
            assert g.augmentation() == 0
            for ax in range(q):
                for ay in range(q):
                    img = g.eval_at_root_powers(q, {"x": ax, "y": ay})
                    assert img.divisible_by(q)


class TestDecide:
    def test_worked_inclusions(self):
        spec3 = IdealSpec(CYCLOTOMIC, 3, window=2, rank=2)
        assert decide(poly2("1-x") * poly2("1-y"), spec3).status == PROVED
        spec4 = IdealSpec(CYCLOTOMIC, 4, window=4, rank=2)
        assert decide(2 * poly2("1-x") ** 3, spec4).status == PROVED

    def test_refuted_witness_q5(self):
        spec5 = IdealSpec(CYCLOTOMIC, 5, window=4, rank=2)
        assert decide(poly2("1-x") ** 3, spec5).status == REFUTED

    def test_sigma_power_route(self):
        spec = IdealSpec(SIGMA_POWER, 3, window=0, rank=2)
        target = poly2("1-x") ** 2 * poly2("1-y")
        v = decide(target, spec)
        assert v.status == PROVED
        assert decide(poly2("1-x"), spec).status == UNKNOWN

    def test_deterministic(self):
        spec = IdealSpec(CYCLOTOMIC, 3, window=2, rank=2)
        target = poly2("1-x") ** 2
        a = decide(target, spec)
        b = decide(target, spec)
        assert verdict_to_json(a, target, spec) == verdict_to_json(b, target, spec)

    def test_budget_monotonicity_on_proved(self):
        # once proved at the default, a larger budget must agree
        spec = IdealSpec(CYCLOTOMIC, 3, window=2, rank=2)
        target = poly2("1-x") ** 2
        small = decide(target, spec, Budget(window=1, box=1))
        large = decide(target, spec, Budget(window=4, box=6))
        assert small.status == large.status == PROVED

    @given(st.integers(0, 400))
    @settings(max_examples=25)
    def test_membership_closure(self, seed):
        import random

        rng = random.Random(seed)
        spec = IdealSpec(CYCLOTOMIC, 3, window=2, rank=2)
        proved = []
        gens = generators(spec)
        for _ in range(2):
            g = gens[rng.randrange(len(gens))]
            u = LaurentPoly.monomial(R2, (rng.randint(-1, 1), rng.randint(-1, 1)))
            proved.append(g * u)
        for target in proved:
            assert decide(target, spec).status == PROVED
        total = proved[0] + proved[1]
        assert decide(total, spec).status == PROVED
        unit = LaurentPoly.monomial(R2, (rng.randint(-2, 2), rng.randint(-2, 2)))
        assert decide(unit * proved[0], spec).status == PROVED


class TestConstructiveCompleteness:
    @given(st.integers(0, 300))
    @settings(max_examples=20)
    def test_agrees_with_boxed_search_on_small_targets(self, seed):
        # the folded construction and the bounded Hermite search must agree
        # on membership whenever the boxed search finds a certificate
        import random

        rng = random.Random(seed)
        spec = IdealSpec(CYCLOTOMIC, 2, window=1, rank=1)
        terms = {(rng.randint(-2, 2),): rng.randint(-2, 2) for _ in range(3)}
        target = LaurentPoly(R1, terms)
        if target.is_zero():
            return
        boxed = find_certificate(target, spec, box=2)
        constructive = constructive_certificate(target, spec)
        if boxed.status == PROVED:
            assert constructive is not None
        if constructive is None:
            assert boxed.status == UNKNOWN

    def test_sigma_parts_complete(self):
        target = poly2("1-x") * poly2("1-y") ** 2
        parts = sigma_power_parts(target, 3)
        assert parts is not None
        assert expand_parts(target, parts) == target
        assert sigma_power_parts(target, 4) is None


class TestCertificateType:
    def test_expansion_checked_on_construction(self):
        with pytest.raises(ValueError):
            Certificate(poly2("1-x"), [(poly2("2"), poly2("1"))])

    def test_obstruction_verifies(self):
        spec = IdealSpec(CYCLOTOMIC, 3, window=1, rank=2)
        v = find_obstruction(poly2("1-x"), spec)
        assert v.obstruction.verify()


class TestSerialization:
    def test_proved_roundtrip(self):
        spec = IdealSpec(CYCLOTOMIC, 3, window=2, rank=2)
        target = poly2("1-2*x+x^2")
        v = decide(target, spec)
        blob = json.dumps(verdict_to_json(v, target, spec))
        replayed = replay_verdict(json.loads(blob))
        assert replayed.status == PROVED

    def test_refuted_roundtrip(self):
        spec = IdealSpec(CYCLOTOMIC, 5, window=4, rank=2)
        target = poly2("1-x") ** 3
        v = decide(target, spec)
        blob = json.dumps(verdict_to_json(v, target, spec))
        assert replay_verdict(json.loads(blob)).status == REFUTED

    def test_tampered_certificate_rejected(self):
        spec = IdealSpec(CYCLOTOMIC, 3, window=2, rank=2)
        target = poly2("1-2*x+x^2")
        payload = verdict_to_json(decide(target, spec), target, spec)
        payload["target"] = "1-3*x+x^2"
        with pytest.raises(ValueError):
            replay_verdict(payload)

    def test_tampered_generator_rejected(self):
        # 2 is not a 3-cyclotomic sum, so this "certificate" must be refused
        # even though it expands correctly
        payload = {
            "schema": "ideal-verdict/1",
            "target": "2",
            "spec": {"kind": CYCLOTOMIC, "q": 3, "W": 2, "k": 2},
            "status": "PROVED",
            "parts": [{"gen": "2", "mul": "1"}],
        }
        with pytest.raises(ValueError):
            replay_verdict(payload)

    def test_constant_q_is_a_recognized_generator(self):
        spec = IdealSpec(CYCLOTOMIC, 3, window=2, rank=2)
        target = poly2("3")
        payload = verdict_to_json(decide(target, spec), target, spec)
        assert replay_verdict(payload).status == PROVED
