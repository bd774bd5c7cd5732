"""Exact solver for integer linear systems A*c = b.

Columns of A are fed one at a time into a Hermite-style echelon basis of the
column lattice.  Each basis row carries the integer combination of original
columns that produced it, so lattice membership of a target immediately
yields an explicit solution vector.  Everything is arbitrary-precision and
deterministic in the insertion order.
"""

from __future__ import annotations

from typing import Sequence

__all__ = ["xgcd", "IntegerLattice", "solve_columns"]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (x, y, g) with x*a + y*b == g == gcd(a, b), g >= 0 for b != 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


class IntegerLattice:
    """Lattice in Z^n spanned by added vectors, kept in echelon form.

    ``basis`` holds rows sorted by pivot position; ``combos[i]`` expresses
    ``basis[i]`` as a sparse {column index: coefficient} combination of the
    vectors added so far.
    """

    def __init__(self, dimension: int):
        self.n = dimension
        self.basis: list[list[int]] = []
        self.combos: list[dict[int, int]] = []
        self.pivot_at: dict[int, int] = {}  # pivot position -> basis row index
        self.count = 0

    def add(self, vec: Sequence[int]) -> None:
        v = list(vec)
        if len(v) != self.n:
            raise ValueError("vector has wrong dimension")
        combo = {self.count: 1}
        self.count += 1
        j = 0
        while j < self.n:
            if v[j] == 0:
                j += 1
                continue
            row_idx = self.pivot_at.get(j)
            if row_idx is None:
                self._insert(j, v, combo)
                return
            row = self.basis[row_idx]
            rc = self.combos[row_idx]
            a, b = row[j], v[j]
            if b % a == 0:
                q = b // a
                for jj in range(j, self.n):
                    v[jj] -= q * row[jj]
                _combo_sub(combo, rc, q)
            else:
                x, y, g = xgcd(a, b)
                ag, bg = a // g, b // g
                new_row = [0] * self.n
                for jj in range(j, self.n):
                    aa, bb = row[jj], v[jj]
                    new_row[jj] = x * aa + y * bb
                    v[jj] = -bg * aa + ag * bb
                new_combo = _combo_axpy(rc, x, combo, y)
                _combo_scale(combo, ag)
                _combo_sub(combo, rc, bg)
                self.basis[row_idx] = new_row
                self.combos[row_idx] = new_combo
            # v[j] is now zero; continue clearing to the right
            j += 1
        # fully reduced to zero: vector was already in the lattice

    def _insert(self, pivot: int, v: list[int], combo: dict[int, int]):
        lo, hi = 0, len(self.basis)
        while lo < hi:
            mid = (lo + hi) // 2
            if _pivot_of(self.basis[mid]) < pivot:
                lo = mid + 1
            else:
                hi = mid
        self.basis.insert(lo, v)
        self.combos.insert(lo, combo)
        self.pivot_at = {_pivot_of(row): i for i, row in enumerate(self.basis)}

    def reduce(self, vec: Sequence[int]) -> tuple[list[int], dict[int, int]]:
        """Reduce a target against the basis; returns (residual, combination)
        where target == residual + sum(combination[col] * column[col])."""
        v = list(vec)
        combo: dict[int, int] = {}
        for j in range(self.n):
            if v[j] == 0:
                continue
            row_idx = self.pivot_at.get(j)
            if row_idx is None:
                continue
            row = self.basis[row_idx]
            if v[j] % row[j] != 0:
                continue
            q = v[j] // row[j]
            for jj in range(j, self.n):
                v[jj] -= q * row[jj]
            _combo_sub(combo, self.combos[row_idx], -q)
        return v, combo

    def solve(self, vec: Sequence[int]) -> dict[int, int] | None:
        """Express the target as an integer combination of added vectors,
        or None if it is not in the lattice."""
        residual, combo = self.reduce(vec)
        if any(residual):
            return None
        return combo


def _pivot_of(row: list[int]) -> int:
    for j, v in enumerate(row):
        if v:
            return j
    raise AssertionError("zero row in basis")


def _combo_sub(target: dict[int, int], src: dict[int, int], q: int):
    if q == 0:
        return
    for k, c in src.items():
        s = target.get(k, 0) - q * c
        if s:
            target[k] = s
        else:
            target.pop(k, None)


def _combo_scale(target: dict[int, int], f: int):
    if f == 1:
        return
    for k in list(target):
        target[k] *= f


def _combo_axpy(a: dict[int, int], x: int, b: dict[int, int], y: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for k, c in a.items():
        out[k] = x * c
    for k, c in b.items():
        s = out.get(k, 0) + y * c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return {k: c for k, c in out.items() if c}


def solve_columns(
    columns: Sequence[Sequence[int]],
    target: Sequence[int],
    check_every: int = 0,
) -> list[int] | None:
    """Solve sum_i c_i * columns[i] == target over the integers.

    ``check_every`` > 0 tests the target after that many insertions and
    returns early once it becomes expressible.
    """
    n = len(target)
    lat = IntegerLattice(n)
    solution: dict[int, int] | None = None
    for i, col in enumerate(columns):
        lat.add(col)
        if check_every and (i + 1) % check_every == 0:
            solution = lat.solve(target)
            if solution is not None:
                break
    if solution is None:
        solution = lat.solve(target)
    if solution is None:
        return None
    out = [0] * len(columns)
    for k, c in solution.items():
        out[k] = c
    return out
