"""Exact point counting in shifted lattices.

A ``ShiftedLattice`` is the point set {B(v + shift) : v integer vector} for
some basis B, described here only through its Gram matrix G = B^T B and the
shift.  Counting vectors with (v+shift)^T G (v+shift) = n is done by depth
first branch-and-bound over the LDL^T decomposition.  All bound comparisons
happen in integers: the rational LDL data is scaled by common denominators
once, so the hot loop is pure int64 work (and is compiled with numba), yet
no comparison ever rounds.

The catalog holds the three lattices used by the mod-4 prime detectors: two
shifted rank-4 lattices whose norms hit 1 mod 4 and 3 mod 4, and the rank-8
even unimodular lattice whose doubled-norm counts match the weight-4
Eisenstein coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from numba import njit

from .numtheory import sigma, sigma_gated


@dataclass(frozen=True)
class ShiftedLattice:
    name: str
    gram: tuple[tuple[Fraction, ...], ...]
    shift: tuple[Fraction, ...]
    norm_unit: int = 1  # theta bin m counts vectors of norm m * norm_unit

    def __post_init__(self) -> None:
        rank = len(self.gram)
        gram = tuple(tuple(Fraction(x) for x in row) for row in self.gram)
        shift = tuple(Fraction(x) for x in self.shift)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "shift", shift)
        if any(len(row) != rank for row in gram):
            raise ValueError("gram matrix must be square")
        if len(shift) != rank:
            raise ValueError(f"shift length {len(shift)} does not match rank {rank}")
        for i in range(rank):
            for j in range(i):
                if gram[i][j] != gram[j][i]:
                    raise ValueError("gram matrix must be symmetric")
        if self.norm_unit < 1:
            raise ValueError(f"norm_unit must be positive, got {self.norm_unit}")
        ldl(gram)  # raises on a non-positive-definite matrix
        self._check_integral_norms()

    def _check_integral_norms(self) -> None:
        # (v+s)^T G (v+s) = v^T G v + v.(2Gs) + s^T G s is an integer for
        # every integer v exactly when the diagonal, the doubled off-diagonal
        # entries, the vector 2Gs and the constant s^T G s all are.
        rank = self.rank
        for i in range(rank):
            if self.gram[i][i].denominator != 1:
                raise ValueError("diagonal gram entries must be integers")
            for j in range(i):
                if (2 * self.gram[i][j]).denominator != 1:
                    raise ValueError("doubled off-diagonal gram entries must be integers")
        const = Fraction(0)
        for i in range(rank):
            lin = Fraction(0)
            for j in range(rank):
                lin += self.gram[i][j] * self.shift[j]
            if (2 * lin).denominator != 1:
                raise ValueError("shift produces non-integer norms")
            const += self.shift[i] * lin
        if const.denominator != 1:
            raise ValueError("shift norm is not an integer")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def norm_of(self, v: tuple[int, ...]) -> Fraction:
        x = [Fraction(c) + s for c, s in zip(v, self.shift)]
        return sum(
            self.gram[i][j] * x[i] * x[j] for i in range(self.rank) for j in range(self.rank)
        )


def ldl(gram: tuple[tuple[Fraction, ...], ...]) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Exact LDL^T decomposition; raises ValueError unless positive definite.

    Returns (L, d) with L unit lower triangular and d the pivot list.
    """
    rank = len(gram)
    L = [[Fraction(0)] * rank for _ in range(rank)]
    d = [Fraction(0)] * rank
    for i in range(rank):
        L[i][i] = Fraction(1)
        pivot = gram[i][i] - sum(d[t] * L[i][t] ** 2 for t in range(i))
        if pivot <= 0:
            raise ValueError("gram matrix is not positive definite")
        d[i] = pivot
        for j in range(i + 1, rank):
            num = gram[j][i] - sum(L[j][t] * d[t] * L[i][t] for t in range(i))
            L[j][i] = num / pivot
    return L, d


@njit
def _isqrt(n: np.int64) -> np.int64:
    if n <= 0:
        return 0
    x = np.int64(math.sqrt(float(n)))
    while x * x > n:
        x -= 1
    while (x + 1) * (x + 1) <= n:
        x += 1
    return x


@njit
def _enumerate_bins(rank, Q, dnum, sQ, UQ, max_scaled, unit_scaled, bins):
    """Depth-first enumeration over the scaled LDL form.

    Level i contributes dnum[i] * W_i^2 to the scaled norm, where
    W_i = Q^2*(v_i + s_i + sum_{j>i} L_ji (v_j + s_j)) is tracked exactly as
    an integer.  A leaf lands in bin (scaled norm) / unit_scaled when the
    division is exact.
    """
    Q2 = Q * Q
    acc = np.zeros((rank, rank), dtype=np.int64)
    part = np.zeros(rank, dtype=np.int64)
    c0 = np.zeros(rank, dtype=np.int64)
    vcur = np.zeros(rank, dtype=np.int64)
    vhi = np.zeros(rank, dtype=np.int64)

    lev = rank - 1
    c0[lev] = Q * sQ[lev]
    lim = _isqrt(max_scaled // dnum[lev])
    vcur[lev] = -((lim + c0[lev]) // Q2) - 1
    vhi[lev] = (lim - c0[lev]) // Q2

    while True:
        vcur[lev] += 1
        if vcur[lev] > vhi[lev]:
            lev += 1
            if lev == rank:
                break
            continue
        w = Q2 * vcur[lev] + c0[lev]
        total = part[lev] + dnum[lev] * (w * w)
        if lev == 0:
            if total % unit_scaled == 0:
                bins[total // unit_scaled] += 1
            continue
        z = Q * vcur[lev] + sQ[lev]
        for t in range(lev):
            acc[lev - 1, t] = acc[lev, t] + UQ[t, lev] * z
        part[lev - 1] = total
        lev -= 1
        c0[lev] = Q * sQ[lev] + acc[lev, lev]
        lim = _isqrt((max_scaled - part[lev]) // dnum[lev])
        vcur[lev] = -((lim + c0[lev]) // Q2) - 1
        vhi[lev] = (lim - c0[lev]) // Q2


def _int64_safety_check(L, d, shift, Q: int, R: int, max_norm: int) -> None:
    """Prove (with exact rational bounds) that every intermediate in the
    enumeration kernel fits comfortably in int64, or refuse to run.

    Per level, |u_i| <= sqrt(max_norm / d_i); coordinates are bounded by
    |x_i| <= |u_i| + sum_{j>i} |L_ji| |x_j|.  All kernel quantities are
    polynomial in these with the known scale factors.
    """
    rank = len(d)
    limit = Fraction(2**62)

    def root_bound(value: Fraction) -> Fraction:
        # integer upper bound for sqrt of a non-negative rational
        return Fraction(math.isqrt(value.numerator // value.denominator) + 1)

    umax = [root_bound(Fraction(max_norm) / d[i]) for i in range(rank)]
    xmax = [Fraction(0)] * rank
    for i in range(rank - 1, -1, -1):
        xmax[i] = umax[i] + sum(abs(L[j][i]) * xmax[j] for j in range(i + 1, rank))
    worst = Fraction(max_norm * R) * Q**4 * 2
    for i in range(rank):
        wmax = Q**2 * umax[i] + Q**2  # one enumeration step of slack
        worst = max(worst, d[i] * R * wmax * wmax + Fraction(max_norm * R) * Q**4)
        accmax = sum(abs(L[j][i]) * Q * Q * xmax[j] for j in range(i + 1, rank))
        worst = max(worst, (accmax + Q * Q * abs(shift[i])) * 2 + wmax)
    if worst >= limit:
        raise ValueError("norm bound too large for the int64 enumeration kernel")


# one int64 bin per norm value; beyond this the array alone costs > 0.5 GB
# and the tree walk would run for weeks anyway
_MAX_BINS = 1 << 26


def _raw_theta_bins(lat: ShiftedLattice, max_norm: int) -> list[int]:
    """Counts of (v+shift)^T G (v+shift) = n for every n = 0..max_norm."""
    if max_norm >= _MAX_BINS:
        raise ValueError(
            f"norm bound {max_norm} is impractical for direct enumeration"
        )
    rank = lat.rank
    L, d = ldl(lat.gram)
    Q = 1
    for i in range(rank):
        Q = math.lcm(Q, lat.shift[i].denominator)
        for j in range(i):
            Q = math.lcm(Q, L[i][j].denominator)
    R = 1
    for di in d:
        R = math.lcm(R, di.denominator)

    dnum = np.array([int(di * R) for di in d], dtype=np.int64)
    sQ = np.array([int(s * Q) for s in lat.shift], dtype=np.int64)
    UQ = np.zeros((rank, rank), dtype=np.int64)
    for i in range(rank):
        for j in range(i + 1, rank):
            UQ[i, j] = int(L[j][i] * Q)

    unit_scaled = R * Q**4
    max_scaled = max_norm * unit_scaled
    _int64_safety_check(L, d, lat.shift, Q, R, max_norm)

    bins = np.zeros(max_norm + 1, dtype=np.int64)
    if max_norm >= 0:
        _enumerate_bins(rank, Q, dnum, sQ, UQ, max_scaled, unit_scaled, bins)
    return [int(b) for b in bins]


_RAW_CACHE: dict[ShiftedLattice, list[int]] = {}


def _raw_bins_cached(lat: ShiftedLattice, max_norm: int) -> list[int]:
    have = _RAW_CACHE.get(lat)
    if have is None or len(have) <= max_norm:
        target = max(max_norm, 2 * (len(have) - 1) if have else 0)
        _RAW_CACHE[lat] = _raw_theta_bins(lat, target)
    return _RAW_CACHE[lat]


def lattice_count(lat: ShiftedLattice, n: int) -> int:
    """Exact number of integer vectors v with (v+shift)^T G (v+shift) = n."""
    if n < 0:
        raise ValueError(f"norm must be non-negative, got {n}")
    return _raw_bins_cached(lat, n)[n]


@dataclass(frozen=True)
class ThetaSeries:
    lattice_name: str
    norm_unit: int
    counts: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, m: int) -> int:
        if not 0 <= m <= self.order:
            raise IndexError(f"bin {m} outside computed range 0..{self.order}")
        return self.counts[m]


def theta_series(lat: ShiftedLattice, order: int) -> ThetaSeries:
    """counts[m] = number of lattice vectors of norm m * norm_unit, so for
    the doubled-norm catalog entry bin m counts vectors of norm 2m."""
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    raw = _raw_bins_cached(lat, order * lat.norm_unit)
    return ThetaSeries(
        lat.name, lat.norm_unit, tuple(raw[m * lat.norm_unit] for m in range(order + 1))
    )


# -- catalog -----------------------------------------------------------------


@lru_cache(maxsize=None)
def lattice_l1() -> ShiftedLattice:
    """Rank-4 shifted lattice with norms 1 mod 4: diagonal form
    4a^2 + 4b^2 + 2(c+1/2)^2 + 2(d+1/2)^2."""
    gram = tuple(
        tuple(Fraction(x) for x in row)
        for row in ((4, 0, 0, 0), (0, 4, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2))
    )
    shift = (Fraction(0), Fraction(0), Fraction(1, 2), Fraction(1, 2))
    return ShiftedLattice("L1", gram, shift)


@lru_cache(maxsize=None)
def lattice_l2() -> ShiftedLattice:
    """Rank-4 shifted lattice with norms 3 mod 4: all four coordinates
    shifted by 1/2."""
    gram = tuple(
        tuple(Fraction(x) for x in row)
        for row in ((4, 0, 0, 0), (0, 4, 0, 0), (0, 0, 2, 0), (0, 0, 0, 2))
    )
    shift = (Fraction(1, 2),) * 4
    return ShiftedLattice("L2", gram, shift)


_E8_BASIS = (
    (2, 0, 0, 0, 0, 0, 0, 0),
    (-1, 1, 0, 0, 0, 0, 0, 0),
    (0, -1, 1, 0, 0, 0, 0, 0),
    (0, 0, -1, 1, 0, 0, 0, 0),
    (0, 0, 0, -1, 1, 0, 0, 0),
    (0, 0, 0, 0, -1, 1, 0, 0),
    (0, 0, 0, 0, 0, -1, 1, 0),
    (Fraction(1, 2),) * 8,
)


@lru_cache(maxsize=None)
def lattice_e8() -> ShiftedLattice:
    """The even unimodular rank-8 lattice, Gram matrix derived from the
    standard basis above.  Theta bins use doubled norms (norm_unit 2)."""
    basis = tuple(tuple(Fraction(x) for x in row) for row in _E8_BASIS)
    gram = tuple(
        tuple(sum(bi[t] * bj[t] for t in range(8)) for bj in basis) for bi in basis
    )
    # Self-check of the hardcoded data: even diagonal, determinant one.
    _, d = ldl(gram)
    det = math.prod(d)
    if det != 1:
        raise AssertionError(f"E8 gram determinant {det}, expected 1")
    if any(gram[i][i] % 2 for i in range(8)):
        raise AssertionError("E8 gram diagonal must be even")
    return ShiftedLattice("E8", gram, (Fraction(0),) * 8, norm_unit=2)


CATALOG_NAMES = ("L1", "L2", "E8")


def catalog(name: str) -> ShiftedLattice:
    if name == "L1":
        return lattice_l1()
    if name == "L2":
        return lattice_l2()
    if name == "E8":
        return lattice_e8()
    raise ValueError(f"unknown catalog lattice {name!r}")


def lattice_count_formula(name: str, n: int) -> int:
    """Closed divisor-sum expressions for the catalog counts.

    L1: 4*sigma_1(n) gated on n = 1 mod 4; L2 the same gated on 3 mod 4;
    E8-even: 240*sigma_3(n), counting vectors of norm 2n.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if name == "L1":
        return 4 * sigma_gated(n, 1, 1, 4)
    if name == "L2":
        return 4 * sigma_gated(n, 1, 3, 4)
    if name == "E8-even":
        return 240 * sigma(n, 3)
    raise ValueError(f"unknown formula name {name!r}, expected L1, L2 or E8-even")
