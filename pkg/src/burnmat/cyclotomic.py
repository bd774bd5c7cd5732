"""Exact arithmetic in Z[X]/Phi_q(X), the ring of q-th cyclotomic integers.

Elements are residue classes of integer polynomials modulo the q-th
cyclotomic polynomial, stored as coefficient tuples of length deg(Phi_q).
Since Phi_q divides X^q - 1, the class of X is a primitive q-th root of
unity and X^q reduces to 1.
"""

from __future__ import annotations

from functools import lru_cache

__all__ = ["cyclotomic_polynomial", "CyclotomicRing", "CyclotomicInt"]


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Exact division of integer polynomials with monic denominator."""
    num = list(num)
    dn = len(den) - 1
    if den[-1] != 1:
        raise ValueError("denominator must be monic")
    quot = [0] * max(0, len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c == 0:
            continue
        quot[i - dn] = c
        for j, d in enumerate(den):
            num[i - dn + j] -= c * d
    while num and num[-1] == 0:
        num.pop()
    return quot, num


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, low degree first, computed by dividing
    X^n - 1 by the product of Phi_d over proper divisors d of n."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return (-1, 1)
    num = [-1] + [0] * (n - 1) + [1]
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            phi_d = cyclotomic_polynomial(d)
            out = [0] * (len(den) + len(phi_d) - 1)
            for i, a in enumerate(den):
                if a:
                    for j, b in enumerate(phi_d):
                        out[i + j] += a * b
            den = out
    quot, rem = _poly_divmod(num, den)
    if rem:
        raise AssertionError("cyclotomic division left a remainder")
    return tuple(quot)


class CyclotomicRing:
    """Factory for residue classes modulo Phi_q."""

    _cache: dict[int, "CyclotomicRing"] = {}

    def __new__(cls, q: int):
        inst = cls._cache.get(q)
        if inst is None:
            inst = super().__new__(cls)
            inst.q = q
            inst.modulus = cyclotomic_polynomial(q)
            inst.degree = len(inst.modulus) - 1
            inst._powers = None
            cls._cache[q] = inst
        return inst

    def zero(self) -> "CyclotomicInt":
        return CyclotomicInt(self, (0,) * self.degree)

    def one(self) -> "CyclotomicInt":
        return self.root_power(0)

    def from_coeffs(self, coeffs) -> "CyclotomicInt":
        cs = list(coeffs)
        if len(cs) > self.degree:
            _, cs = _poly_divmod(cs, list(self.modulus))
        cs = cs + [0] * (self.degree - len(cs))
        return CyclotomicInt(self, tuple(cs))

    def root_power(self, m: int) -> "CyclotomicInt":
        """The class of X^m; X has order q, so m is taken mod q."""
        if self._powers is None:
            powers = []
            for i in range(self.q):
                cs = [0] * i + [1]
                _, cs = _poly_divmod(cs, list(self.modulus))
                cs = cs + [0] * (self.degree - len(cs))
                powers.append(tuple(cs))
            self._powers = powers
        return CyclotomicInt(self, self._powers[m % self.q])


class CyclotomicInt:
    """A cyclotomic integer as a residue-class coefficient vector."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: CyclotomicRing, coeffs: tuple[int, ...]):
        self.ring = ring
        self.coeffs = coeffs

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def divisible_by(self, n: int) -> bool:
        return all(c % n == 0 for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.ring.from_coeffs([other])
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        return self.ring.q == other.ring.q and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring.q, self.coeffs))

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.from_coeffs([other])
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        return CyclotomicInt(
            self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt(self.ring, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.from_coeffs([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInt(self.ring, tuple(a * other for a in self.coeffs))
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        d = self.ring.degree
        out = [0] * (2 * d - 1) if d > 1 else [0]
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return self.ring.from_coeffs(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported here")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    def __repr__(self):
        return f"CyclotomicInt(q={self.ring.q}, {list(self.coeffs)})"
