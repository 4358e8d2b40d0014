"""Cross-checks between independently computed q-series.

Every check here equates two series built through different code paths
(derivative recurrences vs products, Moebius sums vs direct divisor sums,
and so on), so a pass means the library agrees with itself on classical
relations rather than merely reproducing one implementation twice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .eisenstein import coprime_g, eisenstein_e, eisenstein_e2_level, eisenstein_g
from .numtheory import ResidueClassSet, bernoulli, divisors, moebius, residue_classes
from .qseries import QSeries


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str | None = None


def _compare(name: str, left: QSeries, right: QSeries) -> CheckResult:
    bad = left.first_difference(right)
    if bad is None:
        return CheckResult(name, True)
    return CheckResult(name, False, f"first difference at q^{bad}")


def ramanujan_derivative_checks(order: int = 100) -> list[CheckResult]:
    """D E2 = (E2^2 - E4) / 12 and its weight 4 and 6 companions."""
    e2 = eisenstein_e(2, order)
    e4 = eisenstein_e(4, order)
    e6 = eisenstein_e(6, order)
    return [
        _compare("ramanujan weight 2", e2.d(), (e2 * e2 - e4) / 12),
        _compare("ramanujan weight 4", e4.d(), (e2 * e4 - e6) / 3),
        _compare("ramanujan weight 6", e6.d(), (e2 * e6 - e4 * e4) / 2),
    ]


def _refinement_lhs(k: int, order: int) -> QSeries:
    # sum over n >= k of (-1)^(n-k)/n * C(2n, n-k) * q^n / (1-q)^(2n),
    # with 1/(1-q)^(2n) expanded by the negative binomial series.
    coeffs = [Fraction(0)] * (order + 1)
    for n in range(k, order + 1):
        c = Fraction((-1) ** (n - k) * math.comb(2 * n, n - k), n)
        for leftover in range(order - n + 1):
            coeffs[n + leftover] += c * math.comb(leftover + 2 * n - 1, 2 * n - 1)
    return QSeries(coeffs, order)


def refinement_checks(kmax: int = 8, order: int = 50) -> list[CheckResult]:
    """The telescoping binomial refinement: the full sum collapses to q^k/k."""
    out = []
    for k in range(1, kmax + 1):
        rhs = QSeries.monomial(k, order) / k
        out.append(_compare(f"refinement k={k}", _refinement_lhs(k, order), rhs))
    return out


def moebius_checks(
    levels: tuple[int, ...] = (2, 3, 6), weights: tuple[int, ...] = (4, 6), order: int = 60
) -> list[CheckResult]:
    """Coprime-cofactor divisor series as a Moebius combination of dilated
    Eisenstein series: G_k^(N) = -(B_k / 2k) sum_{l | N} mu(l) E_k(q^l)."""
    out = []
    for k in weights:
        ek = eisenstein_e(k, order)
        for level in levels:
            acc = QSeries.zero(order)
            for l in divisors(level):
                acc = acc + ek.dilate(l) * moebius(l)
            rhs = acc * (-bernoulli(k) / (2 * k))
            out.append(_compare(f"moebius N={level} k={k}", coprime_g(level, k, order), rhs))
    return out


def eps_flip_checks(order: int = 60, weights: tuple[int, ...] = (2, 4, 6, 8)) -> list[CheckResult]:
    """Alternating-sign divisor series from the plain one:
    G_{S,N,-1,k}(q) = 2^k G_{S,N,1,k}(q^2) - G_{S,N,1,k}(q)."""
    sets: list[ResidueClassSet] = [residue_classes(*pair) for pair in (
        (1, (0,)), (2, (1,)), (3, (1, 2)), (5, (1, 4)), (5, (2, 3)),
    )]
    out = []
    for classes in sets:
        for k in weights:
            plain = eisenstein_g(classes, 1, k, order)
            flipped = eisenstein_g(classes, -1, k, order)
            rhs = plain.dilate(2) * 2**k - plain
            tag = f"eps flip N={classes.modulus} S={sorted(classes.residues)} k={k}"
            out.append(_compare(tag, flipped, rhs))
    return out


def e2_dilation_checks(levels: tuple[int, ...] = (2, 3, 4, 5, 6), order: int = 80) -> list[CheckResult]:
    """E2(q^N) recovered from the level-lowered weight 2 combination."""
    e2 = eisenstein_e(2, order)
    out = []
    for level in levels:
        rhs = (e2 - eisenstein_e2_level(level, order)) / level
        out.append(_compare(f"E2 dilation N={level}", e2.dilate(level), rhs))
    return out


def run_identity_suite(order: int = 60) -> list[CheckResult]:
    """All checks bundled, at a common default precision where sensible."""
    results = ramanujan_derivative_checks(max(order, 100))
    results += refinement_checks(order=min(order, 50))
    results += moebius_checks(order=order)
    results += eps_flip_checks(order=order)
    results += e2_dilation_checks(order=max(order, 80))
    return results
