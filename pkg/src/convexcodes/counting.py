"""Exact enumeration of discrete interval sets.

Sparse regimes have closed-form counts: any k distinct valid rows form a
set, so the answer is a single binomial coefficient.  Dense regimes are
counted by truncated bivariate generating functions in x (number of
sensors) and y (number of rows), with exact integer coefficients
throughout.  A brute-force oracle and a subspace cross-check are
included for validation at small sizes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Mapping

from .core import (
    BitVector,
    Density,
    Geometry,
    Regime,
    SizeLimit,
    is_discrete_interval,
    row_stats,
)


@dataclass(frozen=True)
class BivariatePoly:
    """Polynomial in x and y, truncated to x-degree <= x_cap and
    y-degree <= y_cap, with exact integer coefficients."""

    coefficients: Mapping[tuple[int, int], int]
    x_cap: int
    y_cap: int

    @classmethod
    def of(cls, coefficients, x_cap, y_cap) -> "BivariatePoly":
        kept = {
            (dx, dy): c
            for (dx, dy), c in coefficients.items()
            if c and dx <= x_cap and dy <= y_cap
        }
        return cls(kept, x_cap, y_cap)

    @classmethod
    def const(cls, c: int, x_cap: int, y_cap: int) -> "BivariatePoly":
        return cls.of({(0, 0): c}, x_cap, y_cap)

    def coeff(self, dx: int, dy: int) -> int:
        return self.coefficients.get((dx, dy), 0)

    def _require_caps(self, other: "BivariatePoly") -> None:
        if (self.x_cap, self.y_cap) != (other.x_cap, other.y_cap):
            raise ValueError("cap mismatch")

    def __add__(self, other: "BivariatePoly") -> "BivariatePoly":
        self._require_caps(other)
        out = dict(self.coefficients)
        for key, c in other.coefficients.items():
            out[key] = out.get(key, 0) + c
        return BivariatePoly.of(out, self.x_cap, self.y_cap)

    def __mul__(self, other: "BivariatePoly") -> "BivariatePoly":
        self._require_caps(other)
        out: dict[tuple[int, int], int] = {}
        for (ax, ay), ac in self.coefficients.items():
            for (bx, by), bc in other.coefficients.items():
                dx, dy = ax + bx, ay + by
                if dx > self.x_cap or dy > self.y_cap:
                    continue
                key = (dx, dy)
                out[key] = out.get(key, 0) + ac * bc
        return BivariatePoly.of(out, self.x_cap, self.y_cap)

    def scale(self, c: int) -> "BivariatePoly":
        return BivariatePoly.of(
            {key: c * v for key, v in self.coefficients.items()},
            self.x_cap,
            self.y_cap,
        )

    def pow(self, e: int) -> "BivariatePoly":
        out = BivariatePoly.const(1, self.x_cap, self.y_cap)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def eval_y(self, y: int) -> dict[int, int]:
        """Collapse the y variable at an integer value; x-degree -> value."""
        out: dict[int, int] = {}
        for (dx, dy), c in self.coefficients.items():
            out[dx] = out.get(dx, 0) + c * y**dy
        return out


@dataclass(frozen=True)
class CountTable:
    """Counts c[(n, k)] of discrete interval sets, for one regime."""

    c: Mapping[tuple[int, int], int]
    regime: Regime

    def count(self, n: int, k: int) -> int:
        return self.c.get((n, k), 0)

    def total(self, n: int) -> int:
        return sum(v for (nn, _), v in self.c.items() if nn == n)


def count_sparse(n: int, k: int, geometry: Geometry) -> int:
    """Number of k-element sets of valid sparse rows on n sensors.

    Line: C(C(n+1, 2), k).  Circle: C(n^2 - n + 1, k) for n >= 2; the
    closed form does not cover n < 2, where the row universe is counted
    directly (n = 0 has no rows, n = 1 only the all-one row).
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if geometry is Geometry.LINE:
        return comb(comb(n + 1, 2), k)
    if n >= 2:
        return comb(n * n - n + 1, k)
    return comb(n, k)  # n = 0 -> [k == 0]; n = 1 -> C(1, k)


def _one_plus_y(x_cap: int, y_cap: int) -> BivariatePoly:
    return BivariatePoly.of({(0, 0): 1, (0, 1): 1}, x_cap, y_cap)


def _geometric(a: BivariatePoly, max_t: int) -> BivariatePoly:
    """Truncation of 1 / (1 - a*x) = sum_t a^t x^t."""
    out: dict[tuple[int, int], int] = {}
    power = BivariatePoly.const(1, a.x_cap, a.y_cap)
    for t in range(max_t + 1):
        for (dx, dy), c in power.coefficients.items():
            key = (dx + t, dy)
            if key[0] <= a.x_cap and key[1] <= a.y_cap:
                out[key] = out.get(key, 0) + c
        power = power * a
    return BivariatePoly.of(out, a.x_cap, a.y_cap)


def _table_from_poly(poly: BivariatePoly, regime: Regime) -> CountTable:
    return CountTable(
        {(dx, dy): c for (dx, dy), c in poly.coefficients.items()}, regime
    )


def gf_dense_linear(N: int, K: int) -> CountTable:
    """Counts of linear-dense discrete interval sets, k rows on n sensors.

    Generating function: sum over m >= 0 of
    x^m / ((1 - a_1 x)(1 - a_2 x) ... (1 - a_{m+1} x)), a_i = (1+y)^i - 1.
    The m-th term has lowest x-degree m, so m <= N terms suffice.
    """
    one = BivariatePoly.const(1, N, K)
    opy = _one_plus_y(N, K)
    a = [None]  # a[i] = (1+y)^i - 1
    for i in range(1, N + 2):
        a.append(opy.pow(i) + one.scale(-1))
    total = BivariatePoly.const(0, N, K)
    for m in range(N + 1):
        term = BivariatePoly.of({(m, 0): 1}, N, K)
        for i in range(1, m + 2):
            term = term * _geometric(a[i], N - m)
        total = total + term
    return _table_from_poly(total, Regime(Geometry.LINE, Density.DENSE))


def gf_dense_circular(N: int, K: int) -> CountTable:
    """Counts of circular-dense discrete interval sets.

    Generating function: 1 + (1+y) * sum over m >= 1 of
    x^m / (1 - a_m x)^(m+1), expanded termwise via
    1/(1 - a x)^(m+1) = sum_t C(m+t, t) a^t x^t.  The inner sum counts
    sets without the all-one row; that row is compatible with every
    other row, so each such set yields one set with it and one without,
    a factor of (1+y) that degenerates to the familiar factor of 2 when
    y = 1.
    """
    one = BivariatePoly.const(1, N, K)
    opy = _one_plus_y(N, K)
    total = BivariatePoly.const(1, N, K)
    for m in range(1, N + 1):
        a_m = opy.pow(m) + one.scale(-1)
        expanded: dict[tuple[int, int], int] = {}
        power = BivariatePoly.const(1, N, K)
        for t in range(N - m + 1):
            for (dx, dy), c in power.coefficients.items():
                key = (dx + t, dy)
                if key[0] <= N and key[1] <= K:
                    expanded[key] = expanded.get(key, 0) + comb(m + t, t) * c
            power = power * a_m
        term = (
            BivariatePoly.of({(m, 0): 1}, N, K)
            * opy
            * BivariatePoly.of(expanded, N, K)
        )
        total = total + term
    return _table_from_poly(total, Regime(Geometry.CIRCLE, Density.DENSE))


def valid_dense_rows(n: int, geometry: Geometry) -> list[BitVector]:
    """All nonzero discrete-interval rows of length n for the geometry."""
    rows = []
    for mask in range(1, 1 << n):
        r = BitVector(n, mask)
        if is_discrete_interval(r, geometry):
            rows.append(r)
    return rows


def brute_force_dense(n: int, geometry: Geometry) -> CountTable:
    """Oracle: count discrete interval sets of each size directly.

    A set of rows is a discrete interval set when no pair (r1, r2) has
    g(r1) = f(r2).  Rows are grouped by their f statistic; summing over
    the possible sets F of realized f-values, each f in F contributes a
    nonempty subset of the rows with that f whose g avoids F.  On the
    circle the all-one row is compatible with everything and doubles
    every count.
    """
    if n > 12:
        raise SizeLimit("brute_force_dense is limited to n <= 12")
    if n < 0:
        raise ValueError("n must be nonnegative")
    regime = Regime(geometry, Density.DENSE)
    if n == 0:
        return CountTable({(0, 0): 1}, regime)

    rows = valid_dense_rows(n, geometry)
    special = sum(1 for r in rows if geometry is Geometry.CIRCLE and r.is_ones)
    stats = [
        row_stats(r, geometry)
        for r in rows
        if not (geometry is Geometry.CIRCLE and r.is_ones)
    ]
    f_values = sorted({f for f, _ in stats})

    counts: dict[int, int] = {0: 1}  # k -> number of sets, before special rows
    for size in range(1, len(f_values) + 1):
        for F in combinations(f_values, size):
            fset = set(F)
            # per realized f-value, how many rows have that f and a g
            # outside F
            per_f = []
            ok = True
            for f in F:
                c = sum(1 for ff, gg in stats if ff == f and gg not in fset)
                if c == 0:
                    ok = False
                    break
                per_f.append(c)
            if not ok:
                continue
            # distribute: each f contributes a nonempty subset of its rows
            acc = {0: 1}
            for c in per_f:
                nxt: dict[int, int] = {}
                for used, ways in acc.items():
                    for take in range(1, c + 1):
                        nxt[used + take] = nxt.get(used + take, 0) + ways * comb(c, take)
                acc = nxt
            for k, ways in acc.items():
                counts[k] = counts.get(k, 0) + ways
    if special:
        doubled: dict[int, int] = {}
        for k, ways in counts.items():
            doubled[k] = doubled.get(k, 0) + ways
            doubled[k + 1] = doubled.get(k + 1, 0) + ways
        counts = doubled
    return CountTable({(n, k): v for k, v in counts.items()}, regime)


def count_full_support_subspaces(dim: int) -> int:
    """Subspaces of the dim-dimensional binary vector space whose basis
    vectors jointly touch every coordinate.

    Subspaces are enumerated once each through their reduced row echelon
    form: choose pivot columns, then fill the free entries to the right
    of each pivot in non-pivot columns.
    """
    if dim > 6:
        raise SizeLimit("subspace enumeration is limited to dim <= 6")
    if dim < 0:
        raise ValueError("dim must be nonnegative")
    full = (1 << dim) - 1
    count = 0
    for r in range(dim + 1):
        for pivots in combinations(range(dim), r):
            free_slots = []
            for i, p in enumerate(pivots):
                for col in range(p + 1, dim):
                    if col not in pivots:
                        free_slots.append((i, col))
            for bits in range(1 << len(free_slots)):
                basis = [1 << p for p in pivots]
                for idx, (i, col) in enumerate(free_slots):
                    if (bits >> idx) & 1:
                        basis[i] |= 1 << col
                support = 0
                for b in basis:
                    support |= b
                if support == full:
                    count += 1
    return count
