"""Membership machinery for the ideals Sigma^m, I(q) and I(q)*Sigma.

Here Sigma is the augmentation ideal of R = Z[x_1^{±1}, ..., x_k^{±1}] and
I(q) is the ideal generated by the q-cyclotomic sums
c_u = 1 + u + u^2 + ... + u^{q-1} over all positive unit monomials u.

Three one-sided verdicts are produced:

* PROVED   -- an explicit Certificate (generator/multiplier pairs whose
              expansion reproduces the target exactly);
* REFUTED  -- an Obstruction (an evaluation homomorphism whose image is
              incompatible with membership);
* UNKNOWN  -- the configured bounds ran out.

Because x_i^q - 1 = c_{x_i} * (x_i - 1) lies in I(q) (and in I(q)*Sigma),
membership can be decided completely by folding exponents modulo q and
solving a finite integer lattice problem over the folded monomial basis;
the folded solution lifts to an explicit certificate with correction terms
along x_i^q - 1.  That constructive route backs ``decide``; the boxed
Hermite-normal-form search of ``find_certificate`` is kept as the generic
bounded-search surface.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache

from .diophantine import IntegerLattice, solve_columns
from .laurent import ExponentSpec, LaurentPoly, Ring, format_poly, parse_poly

SIGMA_POWER = "sigma_power"
CYCLOTOMIC = "cyclotomic"
CYCLOTOMIC_TIMES_SIGMA = "cyclotomic_sigma"

PROVED = "PROVED"
REFUTED = "REFUTED"
UNKNOWN = "UNKNOWN"

__all__ = [
    "SIGMA_POWER",
    "CYCLOTOMIC",
    "CYCLOTOMIC_TIMES_SIGMA",
    "PROVED",
    "REFUTED",
    "UNKNOWN",
    "IdealSpec",
    "Certificate",
    "Obstruction",
    "Verdict",
    "Budget",
    "generators",
    "find_certificate",
    "find_obstruction",
    "decide",
    "sigma_power_parts",
    "verdict_to_json",
    "replay_verdict",
]


@dataclass(frozen=True)
class IdealSpec:
    """A truncated generating set description.

    ``value`` is the power m for SIGMA_POWER and the exponent q for the
    cyclotomic kinds.  ``window`` bounds the units entering the truncated
    generator list: u = prod x_i^{a_i} with |a_i| <= window.
    """

    kind: str
    value: int
    window: int
    rank: int

    def __post_init__(self):
        if self.kind not in (SIGMA_POWER, CYCLOTOMIC, CYCLOTOMIC_TIMES_SIGMA):
            raise ValueError(f"unknown ideal kind {self.kind!r}")
        if self.value < 1 or self.rank < 1 or self.window < 0:
            raise ValueError("bad ideal parameters")
        if self.kind != SIGMA_POWER:
            ExponentSpec.from_q(self.value)  # cyclotomic kinds need a prime power

    @property
    def exps(self) -> ExponentSpec:
        if self.kind == SIGMA_POWER:
            raise ValueError("sigma-power ideals have no exponent data")
        return ExponentSpec.from_q(self.value)

    @property
    def ring(self) -> Ring:
        return Ring(self.rank, False)


def _unit_window(window: int, rank: int) -> list[tuple[int, ...]]:
    """Unit exponent vectors |a_i| <= window, ordered by max-norm shells
    (positive exponents first inside each shell)."""
    units = list(itertools.product(range(-window, window + 1), repeat=rank))
    units.sort(key=lambda a: (max((abs(v) for v in a), default=0), tuple(-v for v in a)))
    return units


def cyclotomic_sum(ring: Ring, u_exp: tuple[int, ...], q: int) -> LaurentPoly:
    """c_u = 1 + u + ... + u^{q-1} for the unit monomial u = prod x_i^{a_i}."""
    terms: dict[tuple[int, ...], int] = {}
    for i in range(q):
        e = tuple(i * a for a in u_exp)
        terms[e] = terms.get(e, 0) + 1
    return LaurentPoly(ring, terms)


def _sigma_exponents(m: int, rank: int) -> list[tuple[int, ...]]:
    out = [e for e in itertools.product(range(m + 1), repeat=rank) if sum(e) == m]
    out.sort(reverse=True)
    return out


def _one_minus_var(ring: Ring, j: int) -> LaurentPoly:
    e = [0] * ring.nvars
    e[j] = 1
    return LaurentPoly(ring, {tuple([0] * ring.nvars): 1, tuple(e): -1})


def sigma_product(ring: Ring, exp: tuple[int, ...]) -> LaurentPoly:
    out = LaurentPoly.one(ring)
    for j, e in enumerate(exp):
        for _ in range(e):
            out = out * _one_minus_var(ring, j)
    return out


def generators(spec: IdealSpec) -> list[LaurentPoly]:
    """Deterministic truncated generator list for the spec."""
    ring = spec.ring
    if spec.kind == SIGMA_POWER:
        return [sigma_product(ring, e) for e in _sigma_exponents(spec.value, spec.rank)]
    units = _unit_window(spec.window, spec.rank)
    cyclos = [cyclotomic_sum(ring, u, spec.value) for u in units]
    if spec.kind == CYCLOTOMIC:
        return cyclos
    return [c * _one_minus_var(ring, j) for c in cyclos for j in range(spec.rank)]


# ---------------------------------------------------------------------------
# evidence types


class Certificate:
    """target == sum(gen * mul) over the parts; checked on construction."""

    __slots__ = ("target", "parts")

    def __init__(self, target: LaurentPoly, parts):
        self.target = target
        self.parts = tuple((g, m) for g, m in parts)
        total = LaurentPoly.zero(target.ring)
        for g, m in self.parts:
            total = total + g * m
        if total != target:
            raise ValueError("certificate does not expand to its target")

    def __repr__(self):
        return f"Certificate(target={format_poly(self.target)!r}, {len(self.parts)} parts)"


@dataclass(frozen=True)
class Obstruction:
    """An evaluation under which the target's image is incompatible with
    membership.  ``hom`` is either {"augmentation": True} or
    {"roots": {"q": q, "powers": {var: a}}} for x_i -> omega^{a_i}."""

    target: LaurentPoly
    hom: dict
    value: tuple
    reason: str

    def verify(self) -> bool:
        if self.hom.get("augmentation"):
            return (self.target.augmentation(),) == tuple(self.value)
        roots = self.hom["roots"]
        img = self.target.eval_at_root_powers(roots["q"], roots["powers"])
        return tuple(img.coeffs) == tuple(self.value)


@dataclass(frozen=True)
class Verdict:
    status: str
    certificate: Certificate | None = None
    obstruction: Obstruction | None = None
    bounds: dict | None = None

    def __post_init__(self):
        if self.status == PROVED and self.certificate is None:
            raise ValueError("PROVED requires a certificate")
        if self.status == REFUTED and self.obstruction is None:
            raise ValueError("REFUTED requires an obstruction")
        if self.status == UNKNOWN and self.bounds is None:
            raise ValueError("UNKNOWN requires a bounds report")


@dataclass(frozen=True)
class Budget:
    """Search budget: unit window, multiplier box, doubling steps."""

    window: int
    box: int
    steps: int = 2

    @classmethod
    def for_q(cls, q: int) -> "Budget":
        es = ExponentSpec.from_q(q)
        return cls(window=es.ephi, box=es.ephi + 1, steps=2)

    def ladder(self) -> list[tuple[int, int]]:
        rungs = []
        for i in range(self.steps, -1, -1):
            w = max(1, -(-self.window // (1 << i)))
            b = max(1, -(-self.box // (1 << i)))
            if (w, b) not in rungs:
                rungs.append((w, b))
        return rungs


# ---------------------------------------------------------------------------
# constructive certificates


def sigma_power_parts(target: LaurentPoly, m: int) -> list | None:
    """Closed-form Sigma^m certificate, or None when target is not in
    Sigma^m.  Complete: membership holds iff sigma_degree >= m."""
    ring = target.ring
    if target.is_zero():
        return []
    if m == 0:
        return [(LaurentPoly.one(ring), target)]
    n = ring.nvars
    shift = tuple(min(e[i] for e in target.terms) for i in range(n))
    # rewrite the unit-shifted target in the basis prod (x_i - 1)^{b_i}
    basis_coeffs: dict[tuple[int, ...], int] = {}
    for exps, c in target.terms.items():
        shifted = tuple(e - s for e, s in zip(exps, shift))
        for b in itertools.product(*(range(e + 1) for e in shifted)):
            w = c
            for e, bi in zip(shifted, b):
                w *= _comb(e, bi)
            if w:
                basis_coeffs[b] = basis_coeffs.get(b, 0) + w
    basis_coeffs = {b: c for b, c in basis_coeffs.items() if c}
    if any(sum(b) < m for b in basis_coeffs):
        return None
    unit_back = LaurentPoly.monomial(ring, shift)
    by_gen: dict[tuple[int, ...], LaurentPoly] = {}
    sign = -1 if m % 2 else 1
    for b, c in sorted(basis_coeffs.items()):
        gen_exp = []
        left = m
        for bi in b:
            take = min(bi, left)
            gen_exp.append(take)
            left -= take
        rest = tuple(bi - g for bi, g in zip(b, gen_exp))
        mult = LaurentPoly.const(ring, sign * c)
        for j, r in enumerate(rest):
            for _ in range(r):
                mult = mult * (LaurentPoly.var(ring, ring.var_names[j]) - 1)
        mult = mult * unit_back
        key = tuple(gen_exp)
        by_gen[key] = by_gen.get(key, LaurentPoly.zero(ring)) + mult
    return [
        (sigma_product(ring, e), mult)
        for e, mult in sorted(by_gen.items(), reverse=True)
        if not mult.is_zero()
    ]


def _comb(n: int, k: int) -> int:
    import math

    return math.comb(n, k) if 0 <= k <= n else 0


class _FoldedLattice:
    """Z-lattice spanned by the folded images of the ideal's generator
    multiples, over the monomial basis of Z[x]/(x_i^q - 1)."""

    def __init__(self, q: int, rank: int, times_sigma: bool):
        self.q = q
        self.rank = rank
        self.times_sigma = times_sigma
        self.dim = q**rank
        ring = Ring(rank, False)
        monos = list(itertools.product(range(q), repeat=rank))
        self.index = {m: i for i, m in enumerate(monos)}
        columns = []
        provenance = []
        js = range(rank) if times_sigma else (None,)
        for u in monos:
            base = {}
            for i in range(q):
                e = tuple((i * a) % q for a in u)
                base[e] = base.get(e, 0) + 1
            for mexp in monos:
                shifted = {
                    tuple((a + b) % q for a, b in zip(e, mexp)): c
                    for e, c in base.items()
                }
                for j in js:
                    if j is None:
                        col = dict(shifted)
                    else:
                        col = dict(shifted)
                        for e, c in shifted.items():
                            e2 = list(e)
                            e2[j] = (e2[j] + 1) % q
                            e2 = tuple(e2)
                            s = col.get(e2, 0) - c
                            if s:
                                col[e2] = s
                            else:
                                col.pop(e2, None)
                    vec = [0] * self.dim
                    for e, c in col.items():
                        vec[self.index[e]] = c
                    columns.append(vec)
                    provenance.append((u, mexp, j))
        self.lattice = IntegerLattice(self.dim)
        for vec in columns:
            self.lattice.add(vec)
        self.provenance = provenance
        self.ring = ring

    def fold(self, poly: LaurentPoly) -> list[int]:
        vec = [0] * self.dim
        for exps, c in poly.terms.items():
            vec[self.index[tuple(e % self.q for e in exps)]] += c
        return vec

    def solve(self, poly: LaurentPoly) -> list[tuple[tuple, tuple, int | None, int]] | None:
        combo = self.lattice.solve(self.fold(poly))
        if combo is None:
            return None
        return [
            self.provenance[i] + (c,) for i, c in sorted(combo.items()) if c
        ]


@lru_cache(maxsize=32)
def _folded_lattice(q: int, rank: int, times_sigma: bool) -> _FoldedLattice:
    return _FoldedLattice(q, rank, times_sigma)


def _peel_periods(poly: LaurentPoly, q: int) -> tuple[dict[int, LaurentPoly], LaurentPoly]:
    """Write poly = sum_i (x_i^q - 1) * h_i + remainder with every remainder
    exponent in [0, q)."""
    ring = poly.ring
    n = ring.nvars
    hs: dict[int, dict[tuple[int, ...], int]] = {i: {} for i in range(n)}
    work = dict(poly.terms)
    for i in range(n):
        nxt: dict[tuple[int, ...], int] = {}
        for exps, c in work.items():
            ei = exps[i]
            r = ei % q
            steps = (ei - r) // q
            if steps > 0:
                for s in range(steps):
                    e = exps[:i] + (r + s * q,) + exps[i + 1 :]
                    hs[i][e] = hs[i].get(e, 0) + c
            elif steps < 0:
                for s in range(steps, 0):
                    e = exps[:i] + (r + s * q,) + exps[i + 1 :]
                    hs[i][e] = hs[i].get(e, 0) - c
            e = exps[:i] + (r,) + exps[i + 1 :]
            nxt[e] = nxt.get(e, 0) + c
        work = {e: c for e, c in nxt.items() if c}
    remainder = LaurentPoly(ring, work)
    return (
        {i: LaurentPoly(ring, h) for i, h in hs.items() if any(h.values())},
        remainder,
    )


def _constructive_cyclotomic_parts(target: LaurentPoly, spec: IdealSpec) -> list | None:
    """Complete certificate construction for I(q) and I(q)*Sigma via the
    folded lattice; None means the target is definitely not a member."""
    q = spec.value
    ring = target.ring
    lat = _folded_lattice(q, spec.rank, spec.kind == CYCLOTOMIC_TIMES_SIGMA)
    combo = lat.solve(target)
    if combo is None:
        return None
    parts = []
    partial = LaurentPoly.zero(ring)
    for u_exp, m_exp, j, coeff in combo:
        gen = cyclotomic_sum(ring, u_exp, q)
        if j is not None:
            gen = gen * _one_minus_var(ring, j)
        mult = LaurentPoly.monomial(ring, m_exp, coeff)
        parts.append((gen, mult))
        partial = partial + gen * mult
    diff = target - partial
    if not diff.is_zero():
        hs, remainder = _peel_periods(diff, q)
        if not remainder.is_zero():
            raise AssertionError("folded solution failed to lift")
        for i, h in sorted(hs.items()):
            # (x_i^q - 1) = c_{x_i} * (x_i - 1)
            u_exp = tuple(1 if v == i else 0 for v in range(ring.nvars))
            c_xi = cyclotomic_sum(ring, u_exp, q)
            if spec.kind == CYCLOTOMIC_TIMES_SIGMA:
                parts.append((c_xi * _one_minus_var(ring, i), -h))
            else:
                xi_minus_1 = LaurentPoly.monomial(ring, u_exp) - 1
                parts.append((c_xi, xi_minus_1 * h))
    return [(g, m) for g, m in parts if not m.is_zero()]


def constructive_certificate(target: LaurentPoly, spec: IdealSpec) -> Certificate | None:
    """Certificate via the complete constructive routes (sigma degree for
    Sigma^m, folded lattice for the cyclotomic kinds); None is a definitive
    non-membership answer."""
    if target.ring.has_t:
        raise ValueError("targets must be t-free")
    if target.is_zero():
        return Certificate(target, [])
    if spec.kind == SIGMA_POWER:
        parts = sigma_power_parts(target, spec.value)
    else:
        parts = _constructive_cyclotomic_parts(target, spec)
    return None if parts is None else Certificate(target, parts)


# ---------------------------------------------------------------------------
# the bounded searches


def find_certificate(target: LaurentPoly, spec: IdealSpec, box: int) -> Verdict:
    """Bounded-support certificate search.

    Multipliers range over monomials inside the box hull of the target's
    support expanded by ``box`` in every direction; the resulting integer
    linear system is solved exactly.  Never refutes.
    """
    if target.ring.has_t:
        raise ValueError("targets must be t-free")
    if target.ring.nx != spec.rank:
        raise ValueError("target rank does not match the ideal spec")
    if target.is_zero():
        return Verdict(PROVED, certificate=Certificate(target, []))
    report = {"kind": spec.kind, "value": spec.value, "window": spec.window, "box": box}
    if spec.kind != SIGMA_POWER:
        # a boxed solution would fold into the complete lattice, so a folded
        # miss makes the bounded search hopeless at any budget
        lat = _folded_lattice(spec.value, spec.rank, spec.kind == CYCLOTOMIC_TIMES_SIGMA)
        if lat.lattice.solve(lat.fold(target)) is None:
            report["folded_member"] = False
            return Verdict(UNKNOWN, bounds=report)
    gens = generators(spec)
    n = target.ring.nvars
    lo = [min(e[i] for e in target.terms) - box for i in range(n)]
    hi = [max(e[i] for e in target.terms) + box for i in range(n)]
    monos = sorted(
        itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))),
        key=lambda e: (sum(abs(v) for v in e), e),
    )
    columns = []
    provenance = []
    positions: dict[tuple[int, ...], int] = {}
    col_terms = []
    for gi, g in enumerate(gens):
        for mexp in monos:
            terms = {tuple(a + b for a, b in zip(e, mexp)): c for e, c in g.terms.items()}
            col_terms.append(terms)
            provenance.append((gi, mexp))
            for e in terms:
                positions.setdefault(e, None)
    for e in target.terms:
        positions.setdefault(e, None)
    pos_list = sorted(positions)
    pos_index = {e: i for i, e in enumerate(pos_list)}
    dim = len(pos_list)
    for terms in col_terms:
        vec = [0] * dim
        for e, c in terms.items():
            vec[pos_index[e]] = c
        columns.append(vec)
    tvec = [0] * dim
    for e, c in target.terms.items():
        tvec[pos_index[e]] = c
    sol = solve_columns(columns, tvec, check_every=64)
    if sol is None:
        report["columns"] = len(columns)
        return Verdict(UNKNOWN, bounds=report)
    by_gen: dict[int, LaurentPoly] = {}
    for (gi, mexp), c in zip(provenance, sol):
        if c:
            mono = LaurentPoly.monomial(target.ring, mexp, c)
            by_gen[gi] = by_gen.get(gi, LaurentPoly.zero(target.ring)) + mono
    parts = [(gens[gi], mult) for gi, mult in sorted(by_gen.items()) if not mult.is_zero()]
    return Verdict(PROVED, certificate=Certificate(target, parts))


def find_obstruction(target: LaurentPoly, spec: IdealSpec) -> Verdict:
    """Root-of-unity / augmentation non-membership search.  Never proves.

    Every truncated generator maps into q*Z[omega] under x_i -> omega^{a_i}
    (the cyclotomic sums map to 0 or to q), so an image outside q*Z[omega]
    refutes membership; for I(q)*Sigma a nonzero augmentation refutes as
    well since the ideal sits inside Sigma.
    """
    if target.ring.has_t:
        raise ValueError("targets must be t-free")
    if spec.kind == SIGMA_POWER:
        raise ValueError("obstructions apply to the cyclotomic kinds only")
    q = spec.value
    names = target.ring.var_names
    if spec.kind == CYCLOTOMIC_TIMES_SIGMA:
        aug = target.augmentation()
        if aug != 0:
            obs = Obstruction(
                target=target,
                hom={"augmentation": True},
                value=(aug,),
                reason="augmentation is nonzero but every generator of the ideal has augmentation 0",
            )
            return Verdict(REFUTED, obstruction=obs)
    for assignment in itertools.product(range(q), repeat=len(names)):
        powers = dict(zip(names, assignment))
        img = target.eval_at_root_powers(q, powers)
        if not img.divisible_by(q):
            obs = Obstruction(
                target=target,
                hom={"roots": {"q": q, "powers": powers}},
                value=tuple(img.coeffs),
                reason=f"image under x_i -> omega^a_i is outside {q}*Z[omega] "
                "while every generator maps into it",
            )
            return Verdict(REFUTED, obstruction=obs)
    return Verdict(
        UNKNOWN,
        bounds={"sweep": q ** len(names), "augmentation_checked": spec.kind == CYCLOTOMIC_TIMES_SIGMA},
    )


def decide(target: LaurentPoly, spec: IdealSpec, budget: Budget | None = None) -> Verdict:
    """Obstruction sweep, then certificate construction.

    For the three supported kinds the constructive certificate route is
    complete, so a miss there makes any bounded multiplier search hopeless
    and the honest answer is UNKNOWN (membership actually fails, but the
    evidence format is reserved for evaluation obstructions).
    """
    if budget is None:
        budget = (
            Budget.for_q(spec.value)
            if spec.kind != SIGMA_POWER
            else Budget(window=spec.window, box=spec.value + 1)
        )
    if target.is_zero():
        return Verdict(PROVED, certificate=Certificate(target, []))
    if spec.kind != SIGMA_POWER:
        refutation = find_obstruction(target, spec)
        if refutation.status == REFUTED:
            return refutation
    cert = constructive_certificate(target, spec)
    if cert is not None:
        return Verdict(PROVED, certificate=cert)
    if spec.kind == SIGMA_POWER:
        report = {
            "kind": spec.kind,
            "value": spec.value,
            "sigma_degree": target.sigma_degree(),
            "budget": (budget.window, budget.box, budget.steps),
        }
    else:
        report = {
            "kind": spec.kind,
            "value": spec.value,
            "folded_member": False,
            "budget": (budget.window, budget.box, budget.steps),
        }
    return Verdict(UNKNOWN, bounds=report)


# ---------------------------------------------------------------------------
# serialization (schema version 1)


def _spec_json(spec: IdealSpec) -> dict:
    return {"kind": spec.kind, "q": spec.value, "W": spec.window, "k": spec.rank}


def spec_from_json(obj: dict) -> IdealSpec:
    return IdealSpec(kind=obj["kind"], value=obj["q"], window=obj["W"], rank=obj["k"])


def verdict_to_json(verdict: Verdict, target: LaurentPoly, spec: IdealSpec) -> dict:
    out = {
        "schema": "ideal-verdict/1",
        "target": format_poly(target),
        "spec": _spec_json(spec),
        "status": verdict.status,
    }
    if verdict.certificate is not None:
        out["parts"] = [
            {"gen": format_poly(g), "mul": format_poly(m)}
            for g, m in verdict.certificate.parts
        ]
    if verdict.obstruction is not None:
        out["hom"] = verdict.obstruction.hom
        out["value"] = list(verdict.obstruction.value)
        out["reason"] = verdict.obstruction.reason
    if verdict.bounds is not None:
        out["bounds"] = verdict.bounds
    return out


def _recognize_generator(gen: LaurentPoly, spec: IdealSpec) -> bool:
    """Check that a certificate generator really is a member of the ideal
    the spec truncates (any window, not just the listed one)."""
    ring = gen.ring
    if spec.kind == SIGMA_POWER:
        return gen.sigma_degree() >= spec.value
    q = spec.value
    candidates = [gen]
    if spec.kind == CYCLOTOMIC_TIMES_SIGMA:
        candidates = []
        for j in range(ring.nvars):
            try:
                candidates.append(gen.divide_exact_by_one_minus_var(j))
            except ValueError:
                continue
        if not candidates:
            return False
    for c in candidates:
        if _is_cyclotomic_sum(c, q):
            return True
    return False


def _is_cyclotomic_sum(p: LaurentPoly, q: int) -> bool:
    if p == LaurentPoly.const(p.ring, q):
        return True  # u = 1
    if len(p.terms) != q or any(c != 1 for c in p.terms.values()):
        return False
    exps = sorted(p.terms)
    zero = (0,) * p.ring.nvars
    if zero not in p.terms:
        return False
    for e in exps:
        if e == zero:
            continue
        # candidate u-exponent: e itself must be i*a for the smallest step
        step = e
        if all(tuple(i * s for s in step) in p.terms for i in range(q)):
            if {tuple(i * s for s in step) for i in range(q)} == set(exps):
                return True
    return False


def replay_verdict(obj: dict) -> Verdict:
    """Re-verify a serialized verdict without any re-search."""
    spec = spec_from_json(obj["spec"])
    ring = spec.ring
    target = parse_poly(obj["target"], ring)
    if obj["status"] == PROVED:
        parts = [
            (parse_poly(p["gen"], ring), parse_poly(p["mul"], ring))
            for p in obj["parts"]
        ]
        for g, _ in parts:
            if not _recognize_generator(g, spec):
                raise ValueError(f"unrecognized generator {format_poly(g)}")
        return Verdict(PROVED, certificate=Certificate(target, parts))
    if obj["status"] == REFUTED:
        hom = obj["hom"]
        if "roots" in hom:
            powers = {k: int(v) for k, v in hom["roots"]["powers"].items()}
            hom = {"roots": {"q": int(hom["roots"]["q"]), "powers": powers}}
        obs = Obstruction(
            target=target, hom=hom, value=tuple(obj["value"]), reason=obj.get("reason", "")
        )
        if not obs.verify():
            raise ValueError("obstruction failed to re-verify")
        if hom.get("augmentation"):
            if spec.kind != CYCLOTOMIC_TIMES_SIGMA or obj["value"][0] == 0:
                raise ValueError("augmentation obstruction is not applicable")
        else:
            if hom["roots"]["q"] != spec.value:
                raise ValueError("obstruction uses roots of the wrong order")
            if all(v % spec.value == 0 for v in obj["value"]):
                raise ValueError("image is admissible; not an obstruction")
        return Verdict(REFUTED, obstruction=obs)
    return Verdict(UNKNOWN, bounds=obj.get("bounds", {}))


def dump_verdict(verdict: Verdict, target: LaurentPoly, spec: IdealSpec) -> str:
    return json.dumps(verdict_to_json(verdict, target, spec), indent=2, sort_keys=True)
