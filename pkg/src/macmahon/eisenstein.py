"""Divisor-sum q-series (Eisenstein-type), eta products, and exact linear
decomposition in hardcoded level-2 form bases.

Conventions.  ``eisenstein_g(classes, eps, k, order)`` is the normalized
series sum_{n>=1} sigma_{classes,eps,k-1}(n) q^n, the building block that the
partition identities are polynomial in.  ``eisenstein_e`` is the classical
weight-k series 1 - (2k/B_k) sum sigma_{k-1}(n) q^n.  The level-2 catalogs
follow the standard bases: weight 2 is spanned by E2 - 2*E2(q^2); weights
4, 6 add the odd-cofactor G series; weight 8 needs the square of the
eta-product cusp form of level 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .numtheory import (
    ResidueClassSet,
    bernoulli,
    divisor_sum_general,
    residue_classes,
    sigma,
    sigma_odd_cofactor,
    units_mod,
)
from .qseries import QSeries


def eisenstein_g(classes: ResidueClassSet, eps: int, k: int, order: int) -> QSeries:
    """sum_{n>=1} sigma_{classes,eps,k-1}(n) q^n, exact."""
    if k < 1:
        raise ValueError(f"weight k must be positive, got {k}")
    return QSeries(
        [0] + [divisor_sum_general(classes, eps, k - 1, n) for n in range(1, order + 1)]
    )


def eisenstein_e(k: int, order: int) -> QSeries:
    """Classical normalized weight-k series 1 - (2k/B_k) sum sigma_{k-1}(n) q^n."""
    if k < 2 or k % 2:
        raise ValueError(f"weight must be even and >= 2, got {k}")
    scale = Fraction(-2 * k) / bernoulli(k)
    return QSeries([1] + [scale * sigma(n, k - 1) for n in range(1, order + 1)])


def eisenstein_e2_level(level: int, order: int) -> QSeries:
    """The weight-2 level form E2(q) - level * E2(q**level)."""
    if level < 2:
        raise ValueError(f"level must be >= 2, got {level}")
    e2 = eisenstein_e(2, order)
    return e2 - level * e2.dilate(level)


def coprime_g(level: int, k: int, order: int) -> QSeries:
    """The divisor-sum series restricted to cofactors coprime to the level."""
    return eisenstein_g(units_mod(level), 1, k, order)


ODD_RESIDUES_MOD2 = residue_classes(2, [1])


def level2_g(k: int, order: int) -> QSeries:
    """sum sigma^{odd cofactor}_{k-1}(n) q^n, the level-2 workhorse."""
    return eisenstein_g(ODD_RESIDUES_MOD2, 1, k, order)


# -- eta products -----------------------------------------------------------


def euler_factor(multiplier: int, order: int) -> QSeries:
    """prod_{j>=1} (1 - q^(multiplier*j)) via the pentagonal number theorem."""
    if multiplier < 1:
        raise ValueError(f"multiplier must be positive, got {multiplier}")
    s = QSeries.one(order)
    j = 1
    while True:
        hit = False
        for jj in (j, -j):
            g = multiplier * jj * (3 * jj - 1) // 2
            if g <= order:
                s.coeffs[g] += (-1) ** j
                hit = True
        if not hit:
            return s
        j += 1


@dataclass(frozen=True)
class EtaProductSpec:
    """q**leading_power * prod over (multiplier, exponent) of
    prod_{j>=1} (1 - q^(multiplier*j))**exponent."""

    factors: tuple[tuple[int, int], ...]
    leading_power: int


def eta_product(spec: EtaProductSpec, order: int) -> QSeries:
    out = QSeries.one(order)
    for multiplier, exponent in spec.factors:
        base = euler_factor(multiplier, order)
        if exponent < 0:
            base = base.inverse()
        for _ in range(abs(exponent)):
            out = out * base
    return out.shift(spec.leading_power)


DELTA2_SPEC = EtaProductSpec(((1, 8), (2, 8)), 1)
DELTA3_SPEC = EtaProductSpec(((1, 6), (3, 6)), 1)


def delta2(order: int) -> QSeries:
    """The weight-8 level-2 cusp form q * prod (1-q^j)^8 (1-q^(2j))^8."""
    return eta_product(DELTA2_SPEC, order)


def delta3(order: int) -> QSeries:
    """The weight-6 level-3 cusp form q * prod (1-q^j)^6 (1-q^(3j))^6."""
    return eta_product(DELTA3_SPEC, order)


@lru_cache(maxsize=8)
def _delta2_coeffs(order: int) -> tuple[int, ...]:
    return tuple(int(c) for c in delta2(order).coeffs)


def level2_partition_value(k: int, n: int) -> int:
    """The n-th coefficient of the k-fold odd-part partition sum, computed
    from its closed divisor-sum formula (k <= 4; k = 4 additionally needs a
    cusp form coefficient)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    s1 = sigma_odd_cofactor(n, 1)
    if k == 1:
        return s1
    s3 = sigma_odd_cofactor(n, 3)
    if k == 2:
        num = s3 - (3 * n - 2) * s1
        q, r = divmod(num, 24)
    elif k == 3:
        s5 = sigma_odd_cofactor(n, 5)
        num = s5 - 5 * (3 * n - 8) * s3 + 2 * (15 * n**2 - 60 * n + 32) * s1
        q, r = divmod(num, 5760)
    elif k == 4:
        s5 = sigma_odd_cofactor(n, 5)
        s7 = sigma_odd_cofactor(n, 7)
        a = _delta2_coeffs(max(n, 64))[n]
        num = (
            3 * s7
            - 119 * (n - 6) * s5
            + 357 * (3 * n**2 - 30 * n + 56) * s3
            - 51 * (35 * n**3 - 420 * n**2 + 1176 * n - 576) * s1
            + 14 * a
        )
        q, r = divmod(num, 16450560)
    else:
        raise ValueError(f"no closed formula wired for k = {k}")
    if r:
        raise ArithmeticError(f"formula for k={k} did not divide exactly at n={n}")
    return q


# -- level-2 bases and decomposition ----------------------------------------


def modular_basis_level2(weight: int, order: int) -> list[tuple[str, QSeries]]:
    """Hardcoded bases of the level-2 modular form spaces of weight 2..8."""
    if weight == 2:
        return [("E2|2", eisenstein_e2_level(2, order))]
    if weight == 4:
        return [("E4", eisenstein_e(4, order)), ("G4^(2)", level2_g(4, order))]
    if weight == 6:
        return [("E6", eisenstein_e(6, order)), ("G6^(2)", level2_g(6, order))]
    if weight == 8:
        return [
            ("E8", eisenstein_e(8, order)),
            ("G8^(2)", level2_g(8, order)),
            ("Delta2", delta2(order)),
        ]
    raise ValueError(f"no catalog basis for weight {weight}")


def quasimodular_basis_level2(weight: int, order: int) -> list[tuple[str, QSeries]]:
    """Basis of level-2 quasimodular forms of the given even weight: all
    D-derivatives of the lower modular bases plus the top derivative of the
    weight-2 divisor series."""
    if weight < 2 or weight % 2:
        raise ValueError(f"weight must be even and >= 2, got {weight}")
    out: list[tuple[str, QSeries]] = []
    for j in range(weight // 2):
        for label, series in modular_basis_level2(weight - 2 * j, order):
            for _ in range(j):
                series = series.d()
            out.append((f"D^{j} {label}" if j else label, series))
    phi = level2_g(2, order)
    j = weight // 2 - 1
    for _ in range(j):
        phi = phi.d()
    out.append((f"D^{j} G2^(2)" if j else "G2^(2)", phi))
    return out


def mixed_weight_basis_level2(max_weight: int, order: int) -> list[tuple[str, QSeries]]:
    """Concatenated quasimodular bases for weights max_weight, max_weight-2,
    ..., 2, in that order."""
    out: list[tuple[str, QSeries]] = []
    for w in range(max_weight, 1, -2):
        out.extend(quasimodular_basis_level2(w, order))
    return out


@dataclass(frozen=True)
class DecompositionResult:
    status: str  # "ExactMatch" | "Mismatch" | "Underdetermined"
    # on Mismatch this still holds the probe-row solution, so the caller can
    # see which candidate failed and where
    coefficients: tuple[Fraction, ...] | None
    first_mismatch: int | None
    verified_order: int

    @property
    def ok(self) -> bool:
        return self.status == "ExactMatch"


def decompose_in_basis(
    target: QSeries,
    basis: list[QSeries],
    probe: int | None = None,
) -> DecompositionResult:
    """Solve target = sum c_i * basis_i exactly.

    The linear system is set up from coefficients 0..probe-1 (default: basis
    size + 4).  A unique probe solution is then checked against every
    remaining coefficient up to the shared truncation order; the first
    failing power is reported.  A probe system with a nontrivial kernel
    yields Underdetermined.
    """
    if not basis:
        raise ValueError("basis must be non-empty")
    width = len(basis)
    if probe is None:
        probe = width + 4
    if probe < width:
        raise ValueError(f"probe {probe} smaller than basis size {width}")
    shared = min(target.order, min(s.order for s in basis))
    if probe > shared + 1:
        raise ValueError(
            f"probe {probe} exceeds available coefficients (shared order {shared})"
        )

    rows = [[basis[c][r] for c in range(width)] + [target[r]] for r in range(probe)]

    # Fraction-exact Gaussian elimination to row echelon form.
    pivot_rows: list[int] = []
    r = 0
    for col in range(width):
        pivot = next((i for i in range(r, probe) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(probe):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivot_rows.append(col)
        r += 1
        if r == probe:
            break

    if len(pivot_rows) < width:
        return DecompositionResult("Underdetermined", None, None, shared)

    coeffs = [Fraction(0)] * width
    for i, col in enumerate(pivot_rows):
        coeffs[col] = rows[i][width]

    # Full verification against every known coefficient.
    for n in range(shared + 1):
        acc = sum((coeffs[c] * basis[c][n] for c in range(width)), Fraction(0))
        if acc != target[n]:
            return DecompositionResult("Mismatch", tuple(coeffs), n, shared)
    return DecompositionResult("ExactMatch", tuple(coeffs), None, shared)
