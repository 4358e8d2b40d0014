"""Generalized MacMahon partition sums.

For a residue class set S mod N, a sign eps and a depth k, the object of
interest is the q-series

    sum over 0 < m_1 < ... < m_k  (each m_i = allowed residue mod N)
        of  eps^k * q^(m_1+...+m_k) / prod_i (1 - eps*q^(m_i))^2.

Its q^n coefficient is the weighted partition count summing prod_i d_i *
eps^(d_i) over all ways to write n = sum m_i d_i with strictly increasing
admissible parts m_i and positive multiplicities d_i.

Two independent routes are implemented: ``macmahon_series`` expands the
factored product (fast, any order), ``macmahon_bruteforce`` enumerates the
partitions directly (slow, per-coefficient).  ``verify_main_identity`` checks
the flagship statement that the depth-k series is the k-th Lehmer polynomial
evaluated at the divisor-sum series of weights 2, 4, ..., 2k.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .eisenstein import eisenstein_g
from .lehmer import lehmer_polynomial
from .numtheory import ResidueClassSet, residue_classes
from .qseries import QSeries


@dataclass(frozen=True)
class MacMahonParams:
    classes: ResidueClassSet
    eps: int
    k: int

    def __post_init__(self) -> None:
        if self.eps not in (1, -1):
            raise ValueError(f"eps must be +1 or -1, got {self.eps!r}")
        if self.k < 1:
            raise ValueError(f"depth k must be positive, got {self.k}")


def macmahon_coeff_tables(
    classes: ResidueClassSet, eps: int, kmax: int, order: int
) -> list[list[int]]:
    """Integer coefficient tables for depths 1..kmax at once.

    Returns tables[k][n] = q^n coefficient of the depth-k series.  Expands
    the product over admissible part sizes m of (1 + t * f_m(q)) truncated at
    t-degree kmax, where f_m = sum_{d>=1} d * eps^d * q^(m*d); the depth-k
    series is the t^k coefficient.  Arithmetic is exact (arbitrary precision
    integers held in object arrays).
    """
    if kmax < 1:
        raise ValueError(f"kmax must be positive, got {kmax}")
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    if eps not in (1, -1):
        raise ValueError(f"eps must be +1 or -1, got {eps!r}")
    levels = [np.zeros(order + 1, dtype=object) for _ in range(kmax + 1)]
    levels[0][0] = 1
    for m in range(1, order + 1):
        if m not in classes:
            continue
        for i in range(kmax, 0, -1):
            dst, src = levels[i], levels[i - 1]
            for d in range(1, order // m + 1):
                w = -d if (eps == -1 and d % 2) else d
                off = m * d
                dst[off:] += w * src[: order + 1 - off]
    return [[int(c) for c in lv] for lv in levels]


def macmahon_series(params: MacMahonParams, order: int) -> QSeries:
    """The depth-k series as an exact QSeries, via the product expansion."""
    table = macmahon_coeff_tables(params.classes, params.eps, params.k, order)
    return QSeries(table[params.k])


def macmahon_bruteforce(params: MacMahonParams, n: int) -> int:
    """q^n coefficient by direct enumeration of weighted partitions.

    Sums prod_i d_i * eps^(d_i) over all 0 < m_1 < ... < m_k with admissible
    residues and multiplicities d_i >= 1 such that sum m_i d_i = n.
    Exponential in k but exact; intended as an independent cross-check.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    admissible = [m for m in range(1, n + 1) if m in params.classes]
    csum = [0]
    for m in admissible:
        csum.append(csum[-1] + m)
    eps, k = params.eps, params.k

    def rec(start: int, parts: int, remaining: int) -> int:
        if parts == 0:
            return 1 if remaining == 0 else 0
        total = 0
        for i in range(start, len(admissible) - parts + 1):
            m = admissible[i]
            tail_min = csum[i + parts] - csum[i + 1]  # smallest completion
            budget = remaining - tail_min
            if m > budget:
                break
            for d in range(1, budget // m + 1):
                w = -d if (eps == -1 and d % 2) else d
                total += w * rec(i + 1, parts - 1, remaining - m * d)
        return total

    return rec(0, k, n)


# -- named variants ----------------------------------------------------------

# letter -> (modulus, residues, eps, signed); ``signed`` applies the extra
# (-1)^k that turns the alternating-sign series into ones with positive
# leading behaviour.
VARIANTS: dict[str, tuple[int, tuple[int, ...], int, bool]] = {
    "A": (1, (0,), 1, False),
    "B": (1, (0,), -1, True),
    "C": (2, (1,), 1, False),
    "D": (2, (1,), -1, True),
    "E": (5, (1, 4), 1, False),
    "F": (5, (1, 4), -1, True),
    "G": (5, (2, 3), 1, False),
    "H": (5, (2, 3), -1, True),
}


def variant_params(letter: str, k: int) -> MacMahonParams:
    try:
        modulus, residues, eps, _ = VARIANTS[letter]
    except KeyError:
        raise ValueError(f"unknown variant {letter!r}, expected one of A..H") from None
    return MacMahonParams(residue_classes(modulus, residues), eps, k)


def variant_series(letter: str, k: int, order: int) -> QSeries:
    """Named variant series, including the (-1)^k sign for the alternating
    family (B, D, F, H)."""
    params = variant_params(letter, k)
    series = macmahon_series(params, order)
    if VARIANTS[letter][3] and k % 2:
        series = -series
    return series


# -- the flagship identity ----------------------------------------------------


@dataclass(frozen=True)
class IdentityReport:
    status: str  # "ExactMatch" | "Mismatch"
    first_mismatch: int | None
    order: int

    @property
    def ok(self) -> bool:
        return self.status == "ExactMatch"


@lru_cache(maxsize=64)
def _divisor_series(classes: ResidueClassSet, eps: int, weight: int, order: int) -> QSeries:
    return eisenstein_g(classes, eps, weight, order)


def verify_main_identity(params: MacMahonParams, order: int) -> IdentityReport:
    """Check that the depth-k partition series equals the k-th Lehmer
    polynomial evaluated at the matching divisor-sum series of weights
    2, 4, ..., 2k, coefficient by coefficient up to the given order."""
    direct = macmahon_series(params, order)
    args = {
        2 * j: _divisor_series(params.classes, params.eps, 2 * j, order)
        for j in range(1, params.k + 1)
    }
    polynomial_side = lehmer_polynomial(params.k).evaluate(args, order)
    first = direct.first_difference(polynomial_side)
    status = "ExactMatch" if first is None else "Mismatch"
    return IdentityReport(status, first, order)
