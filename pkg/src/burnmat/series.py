"""Truncated (t-1)-adic expansions of words in the t-bearing group.

Every element expands as M_f + (t-1)A_1 + (t-1)^2 A_2 + ... with t-free
matrix coefficients.  The generator M_j T_j contributes M_j + (t-1) M_j U_j
where U_j is idempotent (U_j^2 = U_j), so its inverse expands as the
alternating geometric series M_j^{-1} + sum_{i>=1} (-1)^i (t-1)^i U_j
M_j^{-1}; products are multiplied with truncation (orders beyond the cutoff
are dropped, never wrapped).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .laurent import LaurentPoly, Ring
from .matgroup import GroupWord, MatPoly, _generator_pairs

__all__ = ["TruncSeries", "u_matrix", "expand", "min_order", "coeff_sigma_floor"]


def u_matrix(ring: Ring, gen_index: int) -> MatPoly:
    """U_j with 1 on the first j diagonal entries and -1 in row j before the
    diagonal (0-based generator index j >= 1); satisfies U^2 = U."""
    k = ring.nx
    one = LaurentPoly.one(ring)
    zero = LaurentPoly.zero(ring)
    rows = []
    for i in range(k):
        row = [zero] * k
        if i < gen_index:
            row[i] = one
        elif i == gen_index:
            for jj in range(gen_index):
                row[jj] = -one
        rows.append(row)
    return MatPoly(ring, rows)


@dataclass(frozen=True)
class TruncSeries:
    """Coefficients A_0 ... A_D of a (t-1)-adic expansion, truncated at D."""

    trunc: int
    coeffs: tuple[MatPoly, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.trunc + 1:
            raise ValueError("need exactly trunc+1 coefficient matrices")

    @property
    def ring(self) -> Ring:
        return self.coeffs[0].ring

    @property
    def size(self) -> int:
        return self.coeffs[0].size

    @classmethod
    def identity(cls, ring: Ring, k: int, trunc: int) -> "TruncSeries":
        coeffs = [MatPoly.identity(ring, k)] + [MatPoly.zero(ring, k)] * trunc
        return cls(trunc, tuple(coeffs))

    @classmethod
    def from_coeffs(cls, coeffs, trunc: int) -> "TruncSeries":
        ring = coeffs[0].ring
        k = coeffs[0].size
        cs = list(coeffs)[: trunc + 1]
        cs += [MatPoly.zero(ring, k)] * (trunc + 1 - len(cs))
        return cls(trunc, tuple(cs))

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        if self.trunc != other.trunc:
            raise ValueError("truncation mismatch")
        d = self.trunc
        out = []
        for m in range(d + 1):
            acc = MatPoly.zero(self.ring, self.size)
            for i in range(m + 1):
                a = self.coeffs[i]
                b = other.coeffs[m - i]
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            out.append(acc)
        return TruncSeries(d, tuple(out))

    def truncate(self, d: int) -> "TruncSeries":
        if d > self.trunc:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries(d, self.coeffs[: d + 1])

    def is_identity(self) -> bool:
        return self.coeffs[0].is_identity() and all(
            c.is_zero() for c in self.coeffs[1:]
        )


@lru_cache(maxsize=None)
def _letter_series(rank: int, gen_index: int, inverse: bool, trunc: int) -> TruncSeries:
    ring = Ring(rank, False)
    m, m_inv = _generator_pairs(rank, False)[gen_index]
    k = rank
    if gen_index == 0:
        coeffs = [m_inv if inverse else m]
        return TruncSeries.from_coeffs(coeffs, trunc)
    u = u_matrix(ring, gen_index)
    if not inverse:
        return TruncSeries.from_coeffs([m, m * u], trunc)
    tail = u * m_inv
    coeffs = [m_inv]
    for i in range(1, trunc + 1):
        coeffs.append(-tail if i % 2 else tail)
    return TruncSeries.from_coeffs(coeffs, trunc)


def expand(w: GroupWord, trunc: int, rank: int | None = None) -> TruncSeries:
    """Expansion of the evaluated word to the given order; A_0 equals the
    t = 1 specialization of the word."""
    k = rank if rank is not None else w.rank
    out = TruncSeries.identity(Ring(k, False), k, trunc)
    for g, e in w.letters:
        letter = _letter_series(k, g, e < 0, trunc)
        for _ in range(abs(e)):
            out = out * letter
    return out


def min_order(s: TruncSeries) -> int | None:
    """Smallest i >= 1 with A_i nonzero; None when all vanish up to the
    truncation.  Only defined when A_0 is the identity."""
    if not s.coeffs[0].is_identity():
        raise ValueError("min_order needs A_0 = I")
    for i in range(1, s.trunc + 1):
        if not s.coeffs[i].is_zero():
            return i
    return None


def coeff_sigma_floor(s: TruncSeries) -> dict[int, int | float]:
    """Per-order minimum sigma-degree over the entries of A_i (i >= 1);
    orders whose coefficient matrix vanishes are omitted."""
    out: dict[int, int | float] = {}
    for i in range(1, s.trunc + 1):
        mat = s.coeffs[i]
        if mat.is_zero():
            continue
        out[i] = min(p.sigma_degree() for row in mat.rows for p in row)
    return out
