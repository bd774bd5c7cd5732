"""Order and kernel computations in the exponent-q quotient groups.

Equality questions "M = I over S" (S = R / I(q)Sigma) reduce to ideal
membership of the entries of M - I; t-bearing entries are split into
t-coefficients first, since membership in the extended ideal holds iff each
t-coefficient is a member.  All verdicts are one-sided: PROVED and REFUTED
are certified, UNKNOWN is honest.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import ideal
from .ideal import (
    CYCLOTOMIC_TIMES_SIGMA,
    Budget,
    Certificate,
    IdealSpec,
    PROVED,
    REFUTED,
    UNKNOWN,
    Verdict,
    cyclotomic_sum,
    decide,
    find_obstruction,
)
from .laurent import ExponentSpec, LaurentPoly, Ring, format_poly, is_prime_power
from .matgroup import (
    GroupWord,
    MatPoly,
    determinant_unit,
    eval_word,
    exponent_sums,
    fast_power,
    normal_form,
)
from .series import TruncSeries, expand, u_matrix

__all__ = [
    "MembershipReport",
    "OrderVerdict",
    "KernelVerdict",
    "CorollaryReport",
    "is_identity_in_G",
    "is_identity_in_FS",
    "order_in_FS",
    "order_in_G",
    "kernel_probe",
    "corollary_tp_check",
]


@dataclass(frozen=True)
class MembershipReport:
    """Aggregated entrywise verdicts for one matrix-equality question."""

    status: str  # PROVED / REFUTED / UNKNOWN
    items: tuple[tuple[str, Verdict], ...]

    @classmethod
    def combine(cls, items) -> "MembershipReport":
        items = tuple(items)
        statuses = {v.status for _, v in items}
        if REFUTED in statuses:
            status = REFUTED
        elif statuses <= {PROVED}:
            status = PROVED
        else:
            status = UNKNOWN
        return cls(status=status, items=items)

    def counts(self) -> dict[str, int]:
        out = {PROVED: 0, REFUTED: 0, UNKNOWN: 0}
        for _, v in self.items:
            out[v.status] += 1
        return out


def _sigma_spec(q: int, rank: int) -> IdealSpec:
    es = ExponentSpec.from_q(q)
    return IdealSpec(CYCLOTOMIC_TIMES_SIGMA, q, window=es.ephi, rank=rank)


def is_identity_in_FS(m: MatPoly, q: int, budget: Budget | None = None) -> MembershipReport:
    """Does a t-free matrix equal the identity over S = R / I(q)Sigma?"""
    if m.ring.has_t:
        raise ValueError("use is_identity_in_G for t-bearing matrices")
    spec = _sigma_spec(q, m.ring.nx)
    items = []
    k = m.size
    ident = MatPoly.identity(m.ring, k)
    diff = m - ident
    for i in range(k):
        for j in range(k):
            entry = diff.rows[i][j]
            if entry.is_zero():
                continue
            items.append((f"entry({i},{j})", decide(entry, spec, budget)))
    return MembershipReport.combine(items)


def is_identity_in_G(m: MatPoly, q: int, budget: Budget | None = None) -> MembershipReport:
    """Does a matrix over R[t,t^{-1}] equal the identity over S[t,t^{-1}]?

    Each entry of M - I is split into t-coefficients and every coefficient
    is tested against I(q)Sigma.
    """
    if not m.ring.has_t:
        return is_identity_in_FS(m, q, budget)
    spec = _sigma_spec(q, m.ring.nx)
    items = []
    k = m.size
    diff = m - MatPoly.identity(m.ring, k)
    for i in range(k):
        for j in range(k):
            entry = diff.rows[i][j]
            for t_ord, coeff in entry.t_coefficients().items():
                items.append(
                    (f"entry({i},{j})@t^{t_ord}", decide(coeff, spec, budget))
                )
    return MembershipReport.combine(items)


# ---------------------------------------------------------------------------
# folded evaluation
#
# x_i^q - 1 = c_{x_i} (x_i - 1) is a member of I(q)Sigma, so reducing
# x-exponents mod q between multiplications changes every entry by an ideal
# member only; identity tests over S (and over S[t,t^{-1}], with t left
# free) are unaffected while entry sizes stay bounded.


def _fold_mat(m: MatPoly, q: int) -> MatPoly:
    return m.map_entries(lambda p: p.fold_exponents(q))


def _folded_eval(w: GroupWord, q: int, with_t: bool = True) -> MatPoly:
    from .matgroup import _generator_pairs

    k = w.rank
    pairs = _generator_pairs(k, with_t)
    ring = Ring(k, with_t)
    out = MatPoly.identity(ring, k)
    for g, e in w.letters:
        base = pairs[g][0] if e > 0 else pairs[g][1]
        for _ in range(abs(e)):
            out = _fold_mat(out * base, q)
    return out


def _folded_power(m: MatPoly, n: int, q: int) -> MatPoly:
    out = MatPoly.identity(m.ring, m.size)
    base = _fold_mat(m, q)
    while n:
        if n & 1:
            out = _fold_mat(out * base, q)
        if n > 1:
            base = _fold_mat(base * base, q)
        n >>= 1
    return out


def _folded_expand(w: GroupWord, trunc: int, q: int) -> TruncSeries:
    from .series import _letter_series

    k = w.rank
    out = TruncSeries.identity(Ring(k, False), k, trunc)
    for g, e in w.letters:
        letter = _letter_series(k, g, e < 0, trunc)
        for _ in range(abs(e)):
            prod = out * letter
            out = TruncSeries(
                trunc, tuple(_fold_mat(c, q) for c in prod.coeffs)
            )
    return out


# ---------------------------------------------------------------------------
# orders


@dataclass(frozen=True)
class OrderVerdict:
    """kind is "finite" (order divides n), "infinite", or "unknown";
    ``falsified`` flags a refuted identity that contradicts the expected
    exponent law and must be reported prominently."""

    kind: str
    n: int | None = None
    evidence: dict = field(default_factory=dict)
    falsified: bool = False


def _divisors(q: int) -> list[int]:
    return [n for n in range(1, q + 1) if q % n == 0]


def _unit_sigma_parts(u_exp: tuple[int, ...], ring: Ring) -> list[tuple[int, LaurentPoly]]:
    """Write u - 1 = sum_j alpha_j * (1 - x_j) for the monomial u."""
    parts: list[tuple[int, LaurentPoly]] = []
    prefix = [0] * ring.nvars
    for j in range(ring.nvars - 1, -1, -1):
        # x^a y^b - 1 = x^a (y^b - 1) + (x^a - 1), peeling from the last slot
        e = u_exp[j]
        if e == 0:
            continue
        lead = list(u_exp[:j]) + [0] * (ring.nvars - j)
        mono = LaurentPoly.monomial(ring, lead)
        if e > 0:
            geo = LaurentPoly(
                ring,
                {
                    tuple(0 if v != j else i for v in range(ring.nvars)): 1
                    for i in range(e)
                },
            )
            alpha = -(mono * geo)
        else:
            geo = LaurentPoly(
                ring,
                {
                    tuple(0 if v != j else e + i for v in range(ring.nvars)): 1
                    for i in range(-e)
                },
            )
            alpha = mono * geo
        parts.append((j, alpha))
    return parts


def _qth_power_parts(nf, q: int) -> list[tuple[str, Certificate]]:
    """Closed-form certificates that M^q - I has entries in I(q)Sigma.

    With M = u + N, M^q - I = (u^q - 1) + c_u N where c_u = 1 + u + ... +
    u^{q-1}; u^q - 1 = c_u (u - 1) and u - 1 splits over the (1 - x_j), so
    every entry is an explicit combination of generators c_u (1 - x_j).
    """
    ring = nf.ring
    k = nf.rank
    _, u_exp = nf.u.unit_parts()
    c_u = cyclotomic_sum(ring, u_exp, q)
    from .matgroup import fixed_row_vector

    v = fixed_row_vector(ring)
    unit_parts = _unit_sigma_parts(u_exp, ring)
    out = []
    for i in range(k):
        for j in range(k):
            target = c_u * nf.lambdas[i] * v[j]
            parts = []
            if not nf.lambdas[i].is_zero():
                parts.append((c_u * v[j], nf.lambdas[i]))
            if i == j:
                # add u^q - 1 = sum_j [c_u (1 - x_j)] * alpha_j
                for jj, alpha in unit_parts:
                    parts.append((c_u * v[jj], alpha))
                    target = target + c_u * v[jj] * alpha
            if target.is_zero() and not parts:
                continue
            out.append((f"entry({i},{j})", Certificate(target, parts)))
    return out


def order_in_FS(w: GroupWord, q: int) -> OrderVerdict:
    """Least divisor n of q with M^n = I proved over S; the n = q case is
    certified in closed form, so the verdict is always finite."""
    if not is_prime_power(q):
        raise ValueError(f"{q} is not a prime power")
    m = eval_word(w, with_t=False)
    nf = normal_form(m)
    spec = _sigma_spec(q, nf.rank)
    per_divisor: dict[int, str] = {}
    evidence: dict = {"divisors": per_divisor}
    for n in _divisors(q):
        if n == q:
            certs = _qth_power_parts(nf, q)
            diff = fast_power(nf, q).to_matrix() - MatPoly.identity(nf.ring, nf.rank)
            covered = dict(certs)
            for i in range(nf.rank):
                for j in range(nf.rank):
                    label = f"entry({i},{j})"
                    actual = diff.rows[i][j]
                    if label in covered:
                        if covered[label].target != actual:
                            raise AssertionError("closed-form target mismatch")
                    elif not actual.is_zero():
                        raise AssertionError("uncovered nonzero entry")
            per_divisor[n] = PROVED
            evidence["closed_form_parts"] = {
                label: len(c.parts) for label, c in certs
            }
            return OrderVerdict(kind="finite", n=n, evidence=evidence)
        power = fast_power(nf, n) if n > 1 else nf
        diff = power.to_matrix() - MatPoly.identity(nf.ring, nf.rank)
        report = MembershipReport.combine(
            (f"entry({i},{j})", decide(diff.rows[i][j], spec))
            for i in range(nf.rank)
            for j in range(nf.rank)
            if not diff.rows[i][j].is_zero()
        )
        per_divisor[n] = report.status
        if report.status == PROVED:
            return OrderVerdict(kind="finite", n=n, evidence=evidence)
    raise AssertionError("unreachable: n = q is always certified")


def order_in_G(w: GroupWord, q: int, budget: Budget | None = None) -> OrderVerdict:
    """Order dichotomy in F(S[t,t^{-1}]): a nonzero t-sum certifies infinite
    order via the determinant's t-exponent (t stays a free unit and S is not
    the zero ring); otherwise W^q is tested against the identity."""
    if not is_prime_power(q):
        raise ValueError(f"{q} is not a prime power")
    sums, t_sum = exponent_sums(w)
    if t_sum != 0:
        m = eval_word(w, with_t=True)
        det = determinant_unit(m)
        _, exps = det.unit_parts()
        assert exps[-1] == t_sum
        return OrderVerdict(
            kind="infinite",
            evidence={
                "determinant": format_poly(det),
                "t_exponent": exps[-1],
                "reason": "no positive power can be the identity: the "
                "determinant keeps a nonzero t-exponent and t is a free unit",
            },
        )
    m = _folded_eval(w, q, with_t=True)
    power = _folded_power(m, q, q)
    report = is_identity_in_G(power, q, budget)
    if report.status == PROVED:
        return OrderVerdict(
            kind="finite",
            n=q,
            evidence={"entry_counts": report.counts(), "folded_mod": q},
        )
    if report.status == REFUTED:
        refuted = [
            (label, ideal.verdict_to_json(v, v.obstruction.target, _sigma_spec(q, w.rank)))
            for label, v in report.items
            if v.status == REFUTED
        ]
        return OrderVerdict(
            kind="unknown",
            evidence={"refuted_entries": refuted},
            falsified=True,
        )
    return OrderVerdict(kind="unknown", evidence={"entry_counts": report.counts()})


# ---------------------------------------------------------------------------
# kernel membership (the Burnside-map probe)


@dataclass(frozen=True)
class KernelVerdict:
    status: str  # "in_kernel" / "not_in_kernel" / "unknown"
    stage: str
    evidence: dict = field(default_factory=dict)


def kernel_probe(
    w: GroupWord, q: int, trunc: int | None = None, budget: Budget | None = None
) -> KernelVerdict:
    """Staged membership test for the kernel of the map onto the exponent-q
    group: (1) nonzero t-sum, (2) generator exponent sums mod q via the
    determinant unit, (3) the (t-1)-adic expansion with every coefficient
    tested entrywise against the extended ideal, up to the truncation."""
    if not is_prime_power(q):
        raise ValueError(f"{q} is not a prime power")
    es = ExponentSpec.from_q(q)
    if trunc is None:
        trunc = es.ephi + 2
    sums, t_sum = exponent_sums(w)
    if t_sum != 0:
        return KernelVerdict(
            status="not_in_kernel",
            stage="t_sum",
            evidence={"t_sum": t_sum},
        )
    spec = _sigma_spec(q, w.rank)
    ring = Ring(w.rank, False)
    bad = {g: s for g, s in sums.items() if s % q != 0}
    if bad:
        # the determinant of the evaluated word is the unit prod x_g^{s_g}
        # (t-exponent zero here); membership in the kernel would force that
        # unit to equal 1 over S, and x_g^q = 1 over S lets the exponents be
        # reduced mod q, so the reduced unit minus 1 must lie in the ideal
        probe = LaurentPoly.monomial(ring, [sums[g] % q for g in range(w.rank)]) - 1
        verdict = find_obstruction(probe, spec)
        if verdict.status == REFUTED:
            return KernelVerdict(
                status="not_in_kernel",
                stage="exponent_sums",
                evidence={
                    "sums": {str(k): v for k, v in sums.items()},
                    "obstruction": ideal.verdict_to_json(verdict, probe, spec),
                },
            )
        # fall through to the series stage if the sweep somehow missed
    combined = series_identity_report(w, q, trunc, budget)
    status = {
        PROVED: "in_kernel",
        REFUTED: "not_in_kernel",
        UNKNOWN: "unknown",
    }[combined.status]
    return KernelVerdict(
        status=status,
        stage="series",
        evidence={
            "trunc": trunc,
            "entry_counts": combined.counts(),
            "folded_mod": q,
        },
    )


def series_identity_report(
    w: GroupWord, q: int, trunc: int, budget: Budget | None = None
) -> MembershipReport:
    """Expand the word to the given order and test that it represents the
    identity of the quotient group: the constant term must be the identity
    over S and every higher coefficient must vanish over S."""
    spec = _sigma_spec(q, w.rank)
    series = _folded_expand(w, trunc, q)
    items: list[tuple[str, Verdict]] = []
    base = is_identity_in_FS(series.coeffs[0], q, budget)
    items.extend((f"A0:{label}", v) for label, v in base.items)
    for order in range(1, trunc + 1):
        mat = series.coeffs[order]
        for i in range(mat.size):
            for j in range(mat.size):
                entry = mat.rows[i][j]
                if entry.is_zero():
                    continue
                items.append((f"A{order}:entry({i},{j})", decide(entry, spec, budget)))
    return MembershipReport.combine(items)


# ---------------------------------------------------------------------------
# the unit-power residual identity


@dataclass(frozen=True)
class CorollaryReport:
    """Exact expansion of (M_2 T)^p checked piecewise: U is idempotent, the
    constant term M_2^p is the identity over S, every cross term
    (t-1)^j A_j (0 < j < p) vanishes modulo the cyclotomic-times-sigma ideal
    of the full three-variable unit group (the ideal generated when t is
    granted the same cyclotomic relations as x and y), and the residual
    order-p coefficient equals (M_2 U)^p exactly and is nonzero over S."""

    p: int
    u_idempotent: bool
    base_identity: MembershipReport
    cross_terms: tuple[tuple[int, MembershipReport], ...]
    residual_matches: bool
    residual_nonzero: Verdict

    @property
    def ok(self) -> bool:
        return (
            self.u_idempotent
            and self.base_identity.status == PROVED
            and all(r.status == PROVED for _, r in self.cross_terms)
            and self.residual_matches
            and self.residual_nonzero.status == REFUTED
        )


def corollary_tp_check(p: int, budget: Budget | None = None) -> CorollaryReport:
    if not is_prime_power(p) or ExponentSpec.from_q(p).e != 1:
        raise ValueError("p must be prime")
    ring = Ring(2, False)
    word = GroupWord.gen(2, 1) ** p  # (M_2 T)^p
    series = expand(word, p)
    u = u_matrix(ring, 1)
    u_idem = (u * u) == u
    base = is_identity_in_FS(series.coeffs[0], p, budget)
    # cross terms: (t-1)^j A_j tested over the three-variable ring where t
    # is an ordinary unit variable
    ring3 = Ring(3, False)
    es = ExponentSpec.from_q(p)
    spec3 = IdealSpec(CYCLOTOMIC_TIMES_SIGMA, p, window=es.ephi, rank=3)
    tm1 = LaurentPoly.monomial(ring3, (0, 0, 1)) - 1
    cross = []
    for j in range(1, p):
        mat = series.coeffs[j]
        factor = tm1**j
        items = []
        for i in range(mat.size):
            for jj in range(mat.size):
                entry = mat.rows[i][jj]
                if entry.is_zero():
                    continue
                lifted = LaurentPoly(
                    ring3, {e + (0,): c for e, c in entry.terms.items()}
                )
                items.append(
                    (f"entry({i},{jj})", decide(lifted * factor, spec3, budget))
                )
        cross.append((j, MembershipReport.combine(items)))
    from .matgroup import _generator_pairs

    m2 = _generator_pairs(2, False)[1][0]
    residual_expected = (m2 * u) ** p
    residual_matches = series.coeffs[p] == residual_expected
    spec2 = _sigma_spec(p, 2)
    witness = None
    for i in range(2):
        for j in range(2):
            entry = residual_expected.rows[i][j]
            if entry.is_zero():
                continue
            verdict = find_obstruction(entry, spec2)
            if verdict.status == REFUTED:
                witness = verdict
                break
        if witness:
            break
    if witness is None:
        witness = Verdict(UNKNOWN, bounds={"residual": "no obstruction found"})
    return CorollaryReport(
        p=p,
        u_idempotent=u_idem,
        base_identity=base,
        cross_terms=tuple(cross),
        residual_matches=residual_matches,
        residual_nonzero=witness,
    )
