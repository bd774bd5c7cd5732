"""Exact multivariate Laurent polynomials over arbitrary-precision integers.

The ambient ring is Z[x_1^{±1}, ..., x_k^{±1}] with an optional extra unit
variable t in the last exponent slot.  Values are immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

__all__ = [
    "Ring",
    "LaurentPoly",
    "ExponentSpec",
    "parse_poly",
]


@dataclass(frozen=True)
class Ring:
    """Ring descriptor: number of x-variables and whether t is present."""

    nx: int
    has_t: bool = False

    def __post_init__(self):
        if self.nx < 1:
            raise ValueError("need at least one x-variable")

    @property
    def nvars(self) -> int:
        return self.nx + (1 if self.has_t else 0)

    @property
    def var_names(self) -> tuple[str, ...]:
        if self.nx == 1:
            names = ("x",)
        elif self.nx == 2:
            names = ("x", "y")
        else:
            names = tuple(f"x{i + 1}" for i in range(self.nx))
        return names + (("t",) if self.has_t else ())

    def drop_t(self) -> "Ring":
        return Ring(self.nx, False)

    def with_t(self) -> "Ring":
        return Ring(self.nx, True)


def _check_same_ring(a: "LaurentPoly", b: "LaurentPoly"):
    if a.ring != b.ring:
        raise ValueError(f"ring mismatch: {a.ring} vs {b.ring}")


class LaurentPoly:
    """A Laurent polynomial stored as {exponent tuple: nonzero int}.

    Canonical form: no zero coefficients are stored, so two polynomials are
    equal iff their term maps are equal.  Monomials are ordered
    lexicographically on the exponent vector wherever order matters
    (printing, serialization, vectorization).
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[tuple[int, ...], int]):
        clean: dict[tuple[int, ...], int] = {}
        n = ring.nvars
        for exps, c in terms.items():
            if c == 0:
                continue
            if len(exps) != n:
                raise ValueError(f"exponent tuple {exps} has wrong length for {ring}")
            clean[tuple(exps)] = clean.get(tuple(exps), 0) + c
        self.ring = ring
        self.terms = {e: c for e, c in clean.items() if c != 0}
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ring: Ring) -> "LaurentPoly":
        return cls(ring, {})

    @classmethod
    def const(cls, ring: Ring, c: int) -> "LaurentPoly":
        return cls(ring, {(0,) * ring.nvars: c})

    @classmethod
    def one(cls, ring: Ring) -> "LaurentPoly":
        return cls.const(ring, 1)

    @classmethod
    def monomial(cls, ring: Ring, exps: Iterable[int], coeff: int = 1) -> "LaurentPoly":
        return cls(ring, {tuple(exps): coeff})

    @classmethod
    def var(cls, ring: Ring, name: str, power: int = 1) -> "LaurentPoly":
        names = ring.var_names
        if name not in names:
            raise ValueError(f"unknown variable {name!r} in {ring}")
        e = [0] * ring.nvars
        e[names.index(name)] = power
        return cls.monomial(ring, e)

    # -- basic predicates --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.ring.nvars: 1}

    def is_unit_monomial(self) -> bool:
        """True iff the polynomial is ±(single monomial)."""
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    def unit_parts(self) -> tuple[int, tuple[int, ...]]:
        """For a ±monomial, return (sign, exponent tuple)."""
        if not self.is_unit_monomial():
            raise ValueError(f"not a unit monomial: {self}")
        (exps, c), = self.terms.items()
        return (1 if c > 0 else -1), exps

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(self.ring, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        _check_same_ring(self, other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return self._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return self._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(self.ring, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero(self.ring)
            return self._raw(self.ring, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        _check_same_ring(self, other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return self._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int) or n < 0:
            if self.is_unit_monomial():
                sign, exps = self.unit_parts()
                if sign < 0 and n % 2 != 0:
                    return LaurentPoly.monomial(self.ring, tuple(e * n for e in exps), -1)
                return LaurentPoly.monomial(self.ring, tuple(e * n for e in exps), 1)
            raise ValueError("negative powers only for unit monomials")
        result = LaurentPoly.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    @classmethod
    def _raw(cls, ring: Ring, terms: dict) -> "LaurentPoly":
        # internal: terms already canonical (no zeros, right arity)
        p = object.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return self == LaurentPoly.const(self.ring, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- ring maps ---------------------------------------------------------

    def augmentation(self) -> int:
        """Sum of all coefficients (image under every variable -> 1)."""
        return sum(self.terms.values())

    def sigma_degree(self) -> int | float:
        """Largest c with the polynomial in Sigma^c (the augmentation ideal
        power); math.inf for the zero polynomial.

        Multiplying by a unit monomial does not change membership in any
        Sigma^c, so exponents are first shifted to be nonnegative; then each
        variable is substituted by 1 + s_i and the answer is the minimum
        total degree in the s_i.  The s-coefficients are scanned by
        ascending total degree, so the cost stays proportional to the
        answer rather than to the full expansion.
        """
        if self.ring.has_t:
            raise ValueError("sigma_degree is defined over the t-free ring")
        if not self.terms:
            return math.inf
        n = self.ring.nvars
        shift = [min(e[i] for e in self.terms) for i in range(n)]
        shifted = [
            (tuple(e - s for e, s in zip(exps, shift)), c)
            for exps, c in self.terms.items()
        ]
        caps = tuple(max(e[i] for e, _ in shifted) for i in range(n))
        for d in range(sum(caps) + 1):
            for b in _compositions(d, caps):
                total = 0
                for exps, c in shifted:
                    w = c
                    for e, bi in zip(exps, b):
                        if bi:
                            if bi > e:
                                w = 0
                                break
                            w *= math.comb(e, bi)
                    total += w
                if total:
                    return d
        raise AssertionError("nonzero polynomial with no nonzero s-coefficient")

    def evaluate(self, images: Mapping[str, object]):
        """Ring-homomorphic image under variable -> image assignments.

        Every variable of the ring must be assigned.  A variable occurring
        with a negative exponent must have an invertible image (for plain
        integers that means ±1); otherwise the input is rejected.
        """
        names = self.ring.var_names
        missing = [v for v in names if v not in images]
        if missing:
            raise ValueError(f"missing images for {missing}")
        vals = [images[v] for v in names]
        neg_ok = []
        for i, v in enumerate(vals):
            needs_inverse = any(e[i] < 0 for e in self.terms)
            if needs_inverse and isinstance(v, int) and v not in (1, -1):
                raise ValueError(f"non-unit image {v} for {names[i]}")
            neg_ok.append(needs_inverse)
        total = 0
        for exps, coeff in sorted(self.terms.items()):
            term = coeff
            for v, e in zip(vals, exps):
                if e == 0:
                    continue
                if isinstance(v, int) and v in (1, -1):
                    term = term * (1 if v == 1 or e % 2 == 0 else -1)
                else:
                    term = term * v ** e
            total = total + term
        return total

    def eval_at_root_powers(self, q: int, powers: Mapping[str, int]):
        """Image under x_i -> omega^{a_i} with omega a primitive q-th root of
        unity, computed exactly in Z[X]/Phi_q(X).

        Negative exponents are folded with omega^q = 1, so every assignment
        is evaluable.
        """
        from .cyclotomic import CyclotomicRing

        ring = CyclotomicRing(q)
        names = self.ring.var_names
        missing = [v for v in names if v not in powers]
        if missing:
            raise ValueError(f"missing root powers for {missing}")
        a = [powers[v] for v in names]
        acc: dict[int, int] = {}
        for exps, coeff in self.terms.items():
            m = sum(e * ai for e, ai in zip(exps, a)) % q
            acc[m] = acc.get(m, 0) + coeff
        out = ring.zero()
        for m, c in sorted(acc.items()):
            out = out + ring.root_power(m) * c
        return out

    def t_coefficients(self) -> dict[int, "LaurentPoly"]:
        """Split a polynomial over R[t, t^{-1}] as sum_m t^m * result[m].

        Only nonzero coefficient polynomials appear; they live over the
        t-free ring.
        """
        if not self.ring.has_t:
            raise ValueError("polynomial has no t slot")
        base = self.ring.drop_t()
        split: dict[int, dict[tuple[int, ...], int]] = {}
        for exps, c in self.terms.items():
            split.setdefault(exps[-1], {})[exps[:-1]] = c
        return {m: LaurentPoly._raw(base, terms) for m, terms in sorted(split.items())}

    def insert_t(self, ring: Ring, t_power: int = 0) -> "LaurentPoly":
        """Re-embed a t-free polynomial into a ring with a t slot."""
        if self.ring.has_t or not ring.has_t or ring.nx != self.ring.nx:
            raise ValueError("insert_t expects a t-free source and a t-bearing target")
        return LaurentPoly._raw(
            ring, {e + (t_power,): c for e, c in self.terms.items()}
        )

    def fold_exponents(self, q: int) -> "LaurentPoly":
        """Reduce every x-exponent mod q (the t slot, when present, is left
        alone).  The difference from the original is a combination of the
        x_i^q - 1, so membership in any ideal containing those is
        unchanged."""
        skip_last = self.ring.has_t
        out: dict[tuple[int, ...], int] = {}
        for exps, c in self.terms.items():
            if skip_last:
                e = tuple(v % q for v in exps[:-1]) + (exps[-1],)
            else:
                e = tuple(v % q for v in exps)
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentPoly._raw(self.ring, out)

    def rename_t_as_var(self) -> "LaurentPoly":
        """View a polynomial over R[t,t^{-1}] as one over k+1 plain variables
        (t becomes the last x-variable).  Exponent tuples are unchanged."""
        if not self.ring.has_t:
            raise ValueError("no t slot to rename")
        return LaurentPoly._raw(Ring(self.ring.nx + 1, False), dict(self.terms))

    def divide_exact_by_one_minus_var(self, var_index: int) -> "LaurentPoly":
        """Exact division by (1 - x_i); raises if the division is not exact."""
        if self.is_zero():
            return self
        slices: dict[int, dict[tuple[int, ...], int]] = {}
        for exps, c in self.terms.items():
            rest = exps[:var_index] + exps[var_index + 1 :]
            slices.setdefault(exps[var_index], {}).setdefault(rest, 0)
            slices[exps[var_index]][rest] += c
        lo = min(slices)
        hi = max(slices)
        # (1 - x) * q has coefficient q_d - q_{d-1} at degree d
        out: dict[tuple[int, ...], int] = {}
        prev: dict[tuple[int, ...], int] = {}
        for d in range(lo, hi + 1):
            cur = dict(prev)
            for rest, c in slices.get(d, {}).items():
                s = cur.get(rest, 0) + c
                if s:
                    cur[rest] = s
                else:
                    cur.pop(rest, None)
            if d < hi:
                for rest, c in cur.items():
                    e = rest[:var_index] + (d,) + rest[var_index:]
                    out[e] = c
            prev = cur
        if prev:
            raise ValueError("division by (1 - var) is not exact")
        return LaurentPoly._raw(self.ring, {e: c for e, c in out.items() if c})

    # -- formatting --------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r})"


@lru_cache(maxsize=65536)
def _compositions(d: int, caps: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """All exponent tuples with given componentwise caps summing to d."""
    if not caps:
        return ((),) if d == 0 else ()
    head_cap, rest = caps[0], caps[1:]
    out = []
    for j in range(min(d, head_cap) + 1):
        out.extend((j,) + tail for tail in _compositions(d - j, rest))
    return tuple(out)


# -- exponent bookkeeping ---------------------------------------------------


def _factor_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            e = 0
            m = q
            while m % p == 0:
                m //= p
                e += 1
            if m != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, e
    raise ValueError(f"{q} is not a prime power")


@dataclass(frozen=True)
class ExponentSpec:
    """A prime-power exponent q = p^e with phi = p^e - p^{e-1} and
    ephi = e * phi precomputed."""

    q: int
    p: int
    e: int
    phi: int
    ephi: int

    @classmethod
    def from_q(cls, q: int) -> "ExponentSpec":
        p, e = _factor_prime_power(q)
        phi = p**e - p ** (e - 1)
        return cls(q=q, p=p, e=e, phi=phi, ephi=e * phi)

    def __post_init__(self):
        if self.p**self.e != self.q:
            raise ValueError("q must equal p^e")
        if self.phi != self.p**self.e - self.p ** (self.e - 1):
            raise ValueError("phi must equal p^e - p^(e-1)")
        if self.ephi != self.e * self.phi:
            raise ValueError("ephi must equal e*phi")


def is_prime_power(q: int) -> bool:
    try:
        _factor_prime_power(q)
        return True
    except ValueError:
        return False


# -- text syntax -------------------------------------------------------------

_TERM_SPLIT = re.compile(r"(?<!\^)(?=[+-])")
_FACTOR = re.compile(r"^([A-Za-z][A-Za-z0-9]*)(?:\^(-?\d+))?$")


def parse_poly(text: str, ring: Ring) -> LaurentPoly:
    """Parse the text syntax used by the CLI and golden files.

    Terms look like ``3*x^-2*y*t^4`` and are joined by ``+``/``-``.
    """
    names = ring.var_names
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    total = LaurentPoly.zero(ring)
    for chunk in _TERM_SPLIT.split(s):
        if not chunk:
            continue
        sign = 1
        if chunk[0] == "+":
            chunk = chunk[1:]
        elif chunk[0] == "-":
            sign = -1
            chunk = chunk[1:]
        if not chunk:
            raise ValueError(f"dangling sign in {text!r}")
        coeff = sign
        exps = [0] * ring.nvars
        for factor in chunk.split("*"):
            if not factor:
                raise ValueError(f"empty factor in {text!r}")
            if factor.isdigit():
                coeff *= int(factor)
                continue
            m = _FACTOR.match(factor)
            if not m or m.group(1) not in names:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            idx = names.index(m.group(1))
            exps[idx] += int(m.group(2)) if m.group(2) is not None else 1
        total = total + LaurentPoly.monomial(ring, exps, coeff)
    return total


def format_poly(p: LaurentPoly) -> str:
    """Canonical text form; ``parse_poly(format_poly(p), p.ring) == p``."""
    if not p.terms:
        return "0"
    names = p.ring.var_names
    parts: list[str] = []
    for exps, c in sorted(p.terms.items()):
        factors = [
            (name if e == 1 else f"{name}^{e}")
            for name, e in zip(names, exps)
            if e != 0
        ]
        mag = abs(c)
        if mag != 1 or not factors:
            factors.insert(0, str(mag))
        body = "*".join(factors)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(parts)
