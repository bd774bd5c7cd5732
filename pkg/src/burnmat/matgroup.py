"""Matrix groups over Laurent polynomial rings.

For rank k >= 2 the t-free group is generated by M_j = x_j*I + [lambda_j v]
(v = (1-x_1, ..., 1-x_k), lambda_i = 0 except lambda_j = 1); the t-bearing
group by M_1 and M_j*T_j for j >= 2, where T_j has t in the first j-1
diagonal entries, 1 in the remaining ones and 1-t in row j before the
diagonal.  For k = 2 these are

    M1 = [[1, 1-y], [0, x]]      M2T = [[y*t, 0], [1-x*t, 1]]

Commutators follow the convention [a, b] = a b a^{-1} b^{-1}.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .laurent import LaurentPoly, Ring

__all__ = [
    "GroupWord",
    "MatPoly",
    "NormalForm",
    "make_generators",
    "generator_names",
    "eval_word",
    "normal_form",
    "fast_power",
    "basic_commutator_lambda",
    "basic_commutator_word",
    "exponent_sums",
    "determinant_unit",
    "sample_subgroup_element",
    "random_word",
    "parse_word",
    "format_word",
    "fixed_row_vector",
]


# ---------------------------------------------------------------------------
# free group words


def _reduce(letters: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    out: list[tuple[int, int]] = []
    for g, e in letters:
        if e == 0:
            continue
        if out and out[-1][0] == g:
            g0, e0 = out.pop()
            if e0 + e:
                out.append((g0, e0 + e))
        else:
            out.append((g, e))
    return tuple(out)


@dataclass(frozen=True)
class GroupWord:
    """Freely reduced word; letters are (generator index, nonzero exponent)."""

    rank: int
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", _reduce(self.letters))
        for g, _ in self.letters:
            if not 0 <= g < self.rank:
                raise ValueError(f"generator index {g} out of range for rank {self.rank}")

    @classmethod
    def identity(cls, rank: int) -> "GroupWord":
        return cls(rank, ())

    @classmethod
    def gen(cls, rank: int, index: int, exp: int = 1) -> "GroupWord":
        return cls(rank, ((index, exp),))

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return GroupWord(self.rank, self.letters + other.letters)

    def inverse(self) -> "GroupWord":
        return GroupWord(self.rank, tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, n: int) -> "GroupWord":
        if n == 0:
            return GroupWord.identity(self.rank)
        base = self if n > 0 else self.inverse()
        out = base
        for _ in range(abs(n) - 1):
            out = out * base
        return out

    def commutator(self, other: "GroupWord") -> "GroupWord":
        return self * other * self.inverse() * other.inverse()

    def conjugate_by(self, g: "GroupWord") -> "GroupWord":
        return g * self * g.inverse()

    def is_identity(self) -> bool:
        return not self.letters

    def length(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def __str__(self) -> str:
        return format_word(self)


def generator_names(rank: int, with_t: bool) -> list[str]:
    if with_t:
        if rank == 2:
            return ["M1", "M2T"]
        return ["M1"] + [f"M{j}T{j}" for j in range(2, rank + 1)]
    return [f"M{j}" for j in range(1, rank + 1)]


def _name_table(rank: int) -> dict[str, int]:
    table: dict[str, int] = {}
    for j in range(1, rank + 1):
        table[f"M{j}"] = j - 1
        if j >= 2:
            table[f"M{j}T{j}"] = j - 1
    if rank >= 2:
        table["M2T"] = 1
    return table


def parse_word(text: str, rank: int = 2) -> GroupWord:
    """Parse the word syntax: whitespace-separated letters like
    ``M1 M2T^-1``, with nestable commutator brackets ``[ w1 , w2 ]``."""
    table = _name_table(rank)
    tokens = text.replace("[", " [ ").replace("]", " ] ").replace(",", " , ").split()
    pos = 0

    def parse_sequence(stop: set[str]) -> GroupWord:
        nonlocal pos
        out = GroupWord.identity(rank)
        while pos < len(tokens) and tokens[pos] not in stop:
            out = out * parse_item()
        return out

    def parse_item() -> GroupWord:
        nonlocal pos
        tok = tokens[pos]
        if tok == "[":
            pos += 1
            args = [parse_sequence({",", "]"})]
            while pos < len(tokens) and tokens[pos] == ",":
                pos += 1
                args.append(parse_sequence({",", "]"}))
            if pos >= len(tokens) or tokens[pos] != "]":
                raise ValueError(f"unbalanced bracket in {text!r}")
            pos += 1
            if len(args) < 2:
                raise ValueError("a commutator needs at least two arguments")
            out = args[0]
            for a in args[1:]:
                out = out.commutator(a)
            return out
        pos += 1
        name, _, exp_text = tok.partition("^")
        if name not in table:
            raise ValueError(f"unknown generator {name!r} (rank {rank})")
        exp = int(exp_text) if exp_text else 1
        return GroupWord.gen(rank, table[name], exp)

    word = parse_sequence(set())
    if pos != len(tokens):
        raise ValueError(f"trailing tokens in {text!r}")
    return word


def format_word(w: GroupWord, with_t: bool = True) -> str:
    if not w.letters:
        return "1"
    names = generator_names(w.rank, with_t)
    return " ".join(
        names[g] if e == 1 else f"{names[g]}^{e}" for g, e in w.letters
    )


# ---------------------------------------------------------------------------
# matrices


class MatPoly:
    """Square matrix of Laurent polynomials."""

    __slots__ = ("ring", "rows")

    def __init__(self, ring: Ring, rows: Sequence[Sequence[LaurentPoly]]):
        self.ring = ring
        self.rows = tuple(tuple(r) for r in rows)
        k = len(self.rows)
        for r in self.rows:
            if len(r) != k:
                raise ValueError("matrix must be square")
            for p in r:
                if p.ring != ring:
                    raise ValueError("entry ring mismatch")

    @property
    def size(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, ring: Ring, k: int) -> "MatPoly":
        one = LaurentPoly.one(ring)
        zero = LaurentPoly.zero(ring)
        return cls(ring, [[one if i == j else zero for j in range(k)] for i in range(k)])

    @classmethod
    def zero(cls, ring: Ring, k: int) -> "MatPoly":
        z = LaurentPoly.zero(ring)
        return cls(ring, [[z] * k for _ in range(k)])

    def __mul__(self, other):
        if isinstance(other, MatPoly):
            if self.ring != other.ring or self.size != other.size:
                raise ValueError("matrix mismatch")
            k = self.size
            rows = []
            for i in range(k):
                row = []
                for j in range(k):
                    acc = LaurentPoly.zero(self.ring)
                    for l in range(k):
                        a = self.rows[i][l]
                        b = other.rows[l][j]
                        if a.terms and b.terms:
                            acc = acc + a * b
                    row.append(acc)
                rows.append(row)
            return MatPoly(self.ring, rows)
        if isinstance(other, (LaurentPoly, int)):
            return MatPoly(self.ring, [[p * other for p in r] for r in self.rows])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return MatPoly(self.ring, [[other * p for p in r] for r in self.rows])
        return NotImplemented

    def __add__(self, other: "MatPoly") -> "MatPoly":
        if not isinstance(other, MatPoly):
            return NotImplemented
        return MatPoly(
            self.ring,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
        )

    def __sub__(self, other: "MatPoly") -> "MatPoly":
        if not isinstance(other, MatPoly):
            return NotImplemented
        return MatPoly(
            self.ring,
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
        )

    def __neg__(self) -> "MatPoly":
        return MatPoly(self.ring, [[-p for p in r] for r in self.rows])

    def __pow__(self, n: int) -> "MatPoly":
        if n < 0:
            raise ValueError("matrix inverses are taken in closed form only")
        out = MatPoly.identity(self.ring, self.size)
        base = self
        while n:
            if n & 1:
                out = out * base
            if n > 1:
                base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, MatPoly):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash((self.ring, self.rows))

    def is_zero(self) -> bool:
        return all(p.is_zero() for r in self.rows for p in r)

    def is_identity(self) -> bool:
        return self == MatPoly.identity(self.ring, self.size)

    def map_entries(self, f) -> "MatPoly":
        rows = [[f(p) for p in r] for r in self.rows]
        ring = rows[0][0].ring
        return MatPoly(ring, rows)

    def set_t_one(self) -> "MatPoly":
        """Specialize t -> 1 entrywise (the vertical map of the square)."""
        def drop(p: LaurentPoly) -> LaurentPoly:
            base = p.ring.drop_t()
            terms: dict[tuple[int, ...], int] = {}
            for e, c in p.terms.items():
                key = e[:-1]
                s = terms.get(key, 0) + c
                if s:
                    terms[key] = s
                else:
                    terms.pop(key, None)
            return LaurentPoly(base, terms)

        return self.map_entries(drop)

    def evaluate_int(self, images: dict[str, int]) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(p.evaluate(images) for p in r) for r in self.rows)

    def __repr__(self):
        body = "; ".join(", ".join(str(p) for p in r) for r in self.rows)
        return f"MatPoly[{body}]"


def determinant(m: MatPoly) -> LaurentPoly:
    k = m.size
    if k == 1:
        return m.rows[0][0]
    acc = LaurentPoly.zero(m.ring)
    for j in range(k):
        minor = MatPoly(
            m.ring,
            [[m.rows[i][jj] for jj in range(k) if jj != j] for i in range(1, k)],
        )
        term = m.rows[0][j] * determinant(minor)
        acc = acc + (term if j % 2 == 0 else -term)
    return acc


def determinant_unit(m: MatPoly) -> LaurentPoly:
    """Determinant, asserted to be ± a single monomial (as it is for every
    word in the generators); the t-exponent equals the word's t-sum."""
    d = determinant(m)
    if not d.is_unit_monomial():
        raise ValueError(f"determinant {d} is not a unit monomial")
    return d


def fixed_row_vector(ring: Ring) -> tuple[LaurentPoly, ...]:
    """The row vector v = (1 - x_1, ..., 1 - x_k)."""
    k = ring.nx
    out = []
    for j in range(k):
        e = [0] * ring.nvars
        e[j] = 1
        out.append(LaurentPoly.const(ring, 1) - LaurentPoly.monomial(ring, e))
    return tuple(out)


def row_times_matrix(v: Sequence[LaurentPoly], m: MatPoly) -> tuple[LaurentPoly, ...]:
    k = m.size
    return tuple(
        sum((v[i] * m.rows[i][j] for i in range(k)), LaurentPoly.zero(m.ring))
        for j in range(k)
    )


# ---------------------------------------------------------------------------
# generators


def _m_matrix(ring: Ring, j: int) -> MatPoly:
    k = ring.nx
    v = fixed_row_vector(ring)
    xj = LaurentPoly.var(ring, ring.var_names[j])
    rows = []
    for i in range(k):
        row = [LaurentPoly.zero(ring)] * k
        if i == j:
            row = [p for p in v]
            row[j] = row[j] + xj
        else:
            row[i] = xj
        rows.append(row)
    return MatPoly(ring, rows)


def _t_matrix(ring: Ring, j: int, inverse: bool = False) -> MatPoly:
    # T_j: t in the first j-1 diagonal entries, 1 in the rest, 1-t in row j
    # before the diagonal; the inverse is T_j with t -> t^{-1}
    k = ring.nx
    tpow = -1 if inverse else 1
    t = LaurentPoly.var(ring, "t", tpow)
    one = LaurentPoly.one(ring)
    zero = LaurentPoly.zero(ring)
    rows = []
    for i in range(k):
        row = [zero] * k
        if i < j:
            row[i] = t
        else:
            row[i] = one
        if i == j:
            for jj in range(j):
                row[jj] = one - t
        rows.append(row)
    return MatPoly(ring, rows)


@lru_cache(maxsize=None)
def _generator_pairs(rank: int, with_t: bool) -> tuple[tuple[MatPoly, MatPoly], ...]:
    """(generator, inverse) pairs; the closed-form inverses are verified by
    multiplying back to the identity."""
    if rank < 2:
        raise ValueError("rank must be at least 2")
    ring = Ring(rank, with_t)
    k = rank
    pairs = []
    for j in range(k):
        m = _m_matrix(ring, j)
        xj_inv = LaurentPoly.var(ring, ring.var_names[j], -1)
        v = fixed_row_vector(ring)
        rows = []
        for i in range(k):
            row = [LaurentPoly.zero(ring)] * k
            if i == j:
                row = [-(xj_inv * p) for p in v]
                row[j] = row[j] + xj_inv
            else:
                row[i] = xj_inv
            rows.append(row)
        m_inv = MatPoly(ring, rows)
        if with_t and j >= 1:
            g = m * _t_matrix(ring, j)
            g_inv = _t_matrix(ring, j, inverse=True) * m_inv
        else:
            g, g_inv = m, m_inv
        ident = MatPoly.identity(ring, k)
        if g * g_inv != ident or g_inv * g != ident:
            raise AssertionError("generator inverse failed to verify")
        pairs.append((g, g_inv))
    return tuple(pairs)


def make_generators(rank: int, with_t: bool) -> list[MatPoly]:
    """[M_1, ..., M_k] (t-free) or [M_1, M_2 T_2, ..., M_k T_k]."""
    return [g for g, _ in _generator_pairs(rank, with_t)]


def eval_word(w: GroupWord, rank: int | None = None, with_t: bool = True) -> MatPoly:
    """Product of generator matrices (closed-form inverses for negative
    exponents); the identity matrix for the empty word."""
    k = rank if rank is not None else w.rank
    if w.rank > k:
        raise ValueError("word rank exceeds requested rank")
    pairs = _generator_pairs(k, with_t)
    ring = Ring(k, with_t)
    out = MatPoly.identity(ring, k)
    for g, e in w.letters:
        base = pairs[g][0] if e > 0 else pairs[g][1]
        out = out * base ** abs(e)
    return out


def exponent_sums(w: GroupWord) -> tuple[dict[int, int], int]:
    """Signed exponent totals per generator index, plus the t-sum (each
    generator M_j T_j, j >= 2, contributes its exponent)."""
    sums = {g: 0 for g in range(w.rank)}
    for g, e in w.letters:
        sums[g] += e
    t_sum = sum(v for g, v in sums.items() if g >= 1)
    return sums, t_sum


# ---------------------------------------------------------------------------
# normal forms


@dataclass(frozen=True)
class NormalForm:
    """Decomposition M = u*I + N with N's i-th row lambda_i * v and
    lambda_1 (1-x_1) + ... + lambda_k (1-x_k) = 1 - u."""

    u: LaurentPoly
    lambdas: tuple[LaurentPoly, ...]

    @property
    def ring(self) -> Ring:
        return self.u.ring

    @property
    def rank(self) -> int:
        return len(self.lambdas)

    def to_matrix(self) -> MatPoly:
        ring = self.ring
        k = self.rank
        v = fixed_row_vector(ring)
        rows = []
        for i in range(k):
            row = [self.lambdas[i] * v[j] for j in range(k)]
            row[i] = row[i] + self.u
            rows.append(row)
        return MatPoly(ring, rows)

    def constraint_holds(self) -> bool:
        ring = self.ring
        v = fixed_row_vector(ring)
        acc = LaurentPoly.zero(ring)
        for lam, vj in zip(self.lambdas, v):
            acc = acc + lam * vj
        return acc == LaurentPoly.one(ring) - self.u


def normal_form(m: MatPoly) -> NormalForm:
    """Read off (u, lambda_1..lambda_k) from a member of the t-free group;
    raises on matrices not of the u*I + [lambda_i v] shape."""
    if m.ring.has_t:
        raise ValueError("normal forms live over the t-free ring")
    k = m.size
    lambdas = []
    for i in range(k):
        j = 1 if i == 0 else 0
        try:
            lam = m.rows[i][j].divide_exact_by_one_minus_var(j)
        except ValueError as exc:
            raise ValueError(f"row {i} is not a multiple of v: {exc}") from None
        lambdas.append(lam)
    one_minus_xi = fixed_row_vector(m.ring)
    u = m.rows[0][0] - lambdas[0] * one_minus_xi[0]
    if not u.is_unit_monomial() or u.unit_parts()[0] != 1:
        raise ValueError(f"diagonal unit {u} is not a positive monomial")
    nf = NormalForm(u=u, lambdas=tuple(lambdas))
    if nf.to_matrix() != m:
        raise ValueError("matrix is not of the u*I + [lambda_i v] shape")
    return nf


def fast_power(nf: NormalForm, n: int) -> NormalForm:
    """M^n = u^n I + (1 + u + ... + u^{n-1}) N, computed in closed form."""
    if n < 1:
        raise ValueError("n must be positive")
    ring = nf.ring
    geo = LaurentPoly.zero(ring)
    upow = LaurentPoly.one(ring)
    for _ in range(n):
        geo = geo + upow
        upow = upow * nf.u
    return NormalForm(u=upow, lambdas=tuple(geo * lam for lam in nf.lambdas))


def basic_commutator_lambda(a: int, b: int) -> tuple[LaurentPoly, LaurentPoly]:
    """lambda pair of the rank-2 basic commutator [M2, M1, M1..(a more)..,
    M2..(b more)..]: (-(1-y)^{b+1}(1-x)^a, (1-y)^b(1-x)^{a+1})."""
    if a < 0 or b < 0:
        raise ValueError("a and b must be nonnegative")
    ring = Ring(2, False)
    one = LaurentPoly.one(ring)
    omx = one - LaurentPoly.var(ring, "x")
    omy = one - LaurentPoly.var(ring, "y")
    return (-(omy ** (b + 1)) * omx**a, omy**b * omx ** (a + 1))


def basic_commutator_word(a: int, b: int) -> GroupWord:
    """Left-normed word [M2, M1, then a more M1's, then b more M2's]."""
    m1 = GroupWord.gen(2, 0)
    m2 = GroupWord.gen(2, 1)
    w = m2.commutator(m1)
    for _ in range(a):
        w = w.commutator(m1)
    for _ in range(b):
        w = w.commutator(m2)
    return w


# ---------------------------------------------------------------------------
# samplers (deterministic per seed)


def random_word(
    rank: int, rng: random.Random, max_len: int, max_exp: int = 2, nonempty: bool = True
) -> GroupWord:
    """Random freely reduced word of total length (sum of |exponents|) at
    most max_len."""
    budget = rng.randint(1 if nonempty else 0, max_len)
    letters = []
    prev = None
    used = 0
    while used < budget:
        g = rng.randrange(rank)
        while g == prev:
            g = rng.randrange(rank)
        cap = min(max_exp, budget - used)
        e = rng.randint(1, cap) * rng.choice((1, -1))
        letters.append((g, e))
        prev = g
        used += abs(e)
    w = GroupWord(rank, tuple(letters))
    if nonempty and w.is_identity():
        return random_word(rank, rng, max_len, max_exp, nonempty)
    return w


def sample_subgroup_element(
    stratum: str,
    depth: int,
    rank: int = 2,
    seed: int = 0,
    base_len: int = 3,
    max_exp: int = 1,
) -> GroupWord:
    """A word guaranteed by construction to lie in the stratum.

    ``derived`` builds an iterated commutator tree of the given depth over
    random base words; ``lower_central`` builds a left-normed commutator of
    ``depth`` random words.  Deterministic per (stratum, depth, seed).
    """
    rng = random.Random(f"{stratum}:{depth}:{rank}:{seed}:{base_len}:{max_exp}")

    def base() -> GroupWord:
        return random_word(rank, rng, base_len, max_exp)

    if stratum == "derived":
        if depth < 1:
            raise ValueError("derived depth must be >= 1")

        def build(level: int) -> GroupWord:
            if level == 0:
                return base()
            for _ in range(16):
                a = build(level - 1)
                b = build(level - 1)
                c = a.commutator(b)
                if not c.is_identity():
                    return c
            raise AssertionError("sampler kept collapsing to the identity")

        return build(depth)
    if stratum == "lower_central":
        if depth < 1:
            raise ValueError("lower central depth must be >= 1")
        for _ in range(16):
            w = base()
            for _ in range(depth - 1):
                w = w.commutator(base())
            if not w.is_identity() or depth == 1:
                return w
        raise AssertionError("sampler kept collapsing to the identity")
    raise ValueError(f"unknown stratum {stratum!r}")
