"""Prime-detecting sign expressions.

Each expression combines partition-sum values (or lattice point counts) with
polynomial weights so that its sign classifies n: typically zero exactly at
primes of a given shape, negative on a sparse exceptional family, positive
otherwise.  Values are exact integers; backends differ only in how the
partition sums are obtained (closed formulas and cached product expansions
versus direct enumeration).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

from .eisenstein import coprime_g, level2_partition_value
from .lattice import lattice_count, lattice_count_formula, lattice_e8, lattice_l1, lattice_l2
from .numtheory import (
    ResidueClassSet,
    divisor_sum_general,
    factorize,
    is_power_of,
    is_prime,
    residue_classes,
)
from .partitions import MacMahonParams, macmahon_bruteforce, macmahon_coeff_tables
from .qseries import apply_d_polynomial


class Sign(Enum):
    NEGATIVE = "negative"
    ZERO = "zero"
    POSITIVE = "positive"

    @classmethod
    def of(cls, value: int) -> Sign:
        if value < 0:
            return cls.NEGATIVE
        return cls.ZERO if value == 0 else cls.POSITIVE


class Expression(str, Enum):
    LEVEL1_QUADRATIC = "level1-quadratic"
    LEVEL1_CUBIC = "level1-cubic"
    LEVEL2_QUADRATIC = "level2-quadratic"
    LEVEL2_QUARTIC = "level2-quartic"
    LEVEL3_QUADRATIC = "level3-quadratic"
    LATTICE_1MOD4 = "lattice-1mod4"
    LATTICE_3MOD4 = "lattice-3mod4"


@dataclass(frozen=True)
class LelievreExpression:
    """The antisymmetrized pair of D-operator combinations
    (D^l + 1) G_{k+1} - (D^k + 1) G_{l+1} over cofactors coprime to the
    level; its n-th coefficient has a closed divisor-sum form."""

    level: int
    k: int
    l: int

    def __post_init__(self) -> None:
        if self.level < 1:
            raise ValueError(f"level must be positive, got {self.level}")
        if not 1 <= self.k < self.l:
            raise ValueError(f"need 1 <= k < l, got k={self.k}, l={self.l}")

    @property
    def value(self) -> str:
        return f"lelievre-N{self.level}-k{self.k}-l{self.l}"


ExpressionLike = Expression | LelievreExpression

LEVEL1_CLASSES = residue_classes(1, [0])
LEVEL2_CLASSES = residue_classes(2, [1])
LEVEL3_CLASSES = residue_classes(3, [1, 2])

_FAMILY = {
    Expression.LEVEL1_QUADRATIC: (LEVEL1_CLASSES, 3),
    Expression.LEVEL1_CUBIC: (LEVEL1_CLASSES, 3),
    Expression.LEVEL2_QUADRATIC: (LEVEL2_CLASSES, 3),
    Expression.LEVEL2_QUARTIC: (LEVEL2_CLASSES, 3),
    Expression.LEVEL3_QUADRATIC: (LEVEL3_CLASSES, 2),
}

# classes -> coefficient tables for depths 1..kmax, grown geometrically
_TABLE_CACHE: dict[tuple[ResidueClassSet, int], list[list[int]]] = {}


def _warm_tables(classes: ResidueClassSet, kmax: int, order: int) -> list[list[int]]:
    key = (classes, kmax)
    tables = _TABLE_CACHE.get(key)
    if tables is None or len(tables[0]) <= order:
        have = len(tables[0]) - 1 if tables else 0
        tables = macmahon_coeff_tables(classes, 1, kmax, max(order, 2 * have, 64))
        _TABLE_CACHE[key] = tables
    return tables


def partition_sum(classes: ResidueClassSet, k: int, n: int, backend: str = "formula") -> int:
    """Depth-k MacMahon partition sum at n for eps = +1, by either backend."""
    if backend == "bruteforce":
        return macmahon_bruteforce(MacMahonParams(classes, 1, k), n)
    if backend != "formula":
        raise ValueError(f"unknown backend {backend!r}")
    if classes == LEVEL2_CLASSES and k <= 4:
        return level2_partition_value(k, n)
    if k == 1:
        return divisor_sum_general(classes, 1, 1, n)
    kmax = max(k, 3 if classes == LEVEL1_CLASSES else 2)
    return _warm_tables(classes, kmax, n)[k][n]


def lelievre_coeff(level: int, k: int, l: int, n: int) -> int:
    """Closed form: sum over divisors d of n with cofactor coprime to the
    level of (n^l + 1) d^k - (n^k + 1) d^l."""
    expr = LelievreExpression(level, k, l)  # validates arguments
    total = 0
    nk, nl = n**expr.k + 1, n**expr.l + 1
    for d in range(1, n + 1):
        if n % d == 0 and math.gcd(n // d, level) == 1:
            total += nl * d**k - nk * d**l
    return total


def lelievre_series(level: int, k: int, l: int, order: int):
    """Series route: (D^l + 1) G_{k+1} - (D^k + 1) G_{l+1} on the
    coprime-cofactor divisor series."""
    LelievreExpression(level, k, l)
    g_low = coprime_g(level, k + 1, order)
    g_high = coprime_g(level, l + 1, order)
    return apply_d_polynomial(g_low, [1] + [0] * (l - 1) + [1]) - apply_d_polynomial(
        g_high, [1] + [0] * (k - 1) + [1]
    )


def evaluate_expression(expr: ExpressionLike, n: int, backend: str = "formula") -> int:
    """Exact value of the expression at n (n >= 2)."""
    if n < 2:
        raise ValueError(f"expressions are defined for n >= 2, got {n}")
    if isinstance(expr, LelievreExpression):
        if backend == "bruteforce":
            return int(lelievre_series(expr.level, expr.k, expr.l, n)[n])
        return lelievre_coeff(expr.level, expr.k, expr.l, n)

    if expr in (Expression.LATTICE_1MOD4, Expression.LATTICE_3MOD4):
        weight = 60 * (n * n - n + 1)
        name = "L1" if expr is Expression.LATTICE_1MOD4 else "L2"
        if backend == "bruteforce":
            lat = lattice_l1() if name == "L1" else lattice_l2()
            return weight * lattice_count(lat, n) - lattice_count(lattice_e8(), 2 * n)
        if backend != "formula":
            raise ValueError(f"unknown backend {backend!r}")
        return weight * lattice_count_formula(name, n) - lattice_count_formula("E8-even", n)

    classes, _ = _FAMILY[expr]
    m = lambda k: partition_sum(classes, k, n, backend)  # noqa: E731
    if expr is Expression.LEVEL1_QUADRATIC:
        return (n * n - 3 * n + 2) * m(1) - 8 * m(2)
    if expr is Expression.LEVEL1_CUBIC:
        return (
            (3 * n**3 - 13 * n**2 + 18 * n - 8) * m(1)
            + (12 * n**2 - 120 * n + 212) * m(2)
            - 960 * m(3)
        )
    if expr is Expression.LEVEL2_QUADRATIC:
        return (n * n - 4 * n + 3) * m(1) - 24 * m(2)
    if expr is Expression.LEVEL2_QUARTIC:
        return (
            (n**4 - n**3 - 14 * n**2 + 29 * n - 15) * m(1)
            - 120 * (3 * n - 8) * m(2)
            - 5760 * m(3)
        )
    if expr is Expression.LEVEL3_QUADRATIC:
        return (n * n - 3 * n + 2) * m(1) - 12 * m(2)
    raise ValueError(f"unknown expression {expr!r}")


def expected_outcome(expr: ExpressionLike, n: int) -> tuple[Sign, str]:
    """Ground-truth class of n for the expression's trichotomy, computed
    from primality and prime-power structure alone."""
    if n < 2:
        raise ValueError(f"expressions are defined for n >= 2, got {n}")
    if isinstance(expr, LelievreExpression):
        if is_prime(n) and expr.level % n != 0:
            return Sign.ZERO, "prime not dividing level"
        if all(expr.level % p == 0 for p in factorize(n)):
            return Sign.NEGATIVE, "all prime factors divide level"
        return Sign.POSITIVE, "other"
    if expr in (Expression.LEVEL1_QUADRATIC, Expression.LEVEL1_CUBIC):
        return (Sign.ZERO, "prime") if is_prime(n) else (Sign.POSITIVE, "composite")
    if expr in (Expression.LEVEL2_QUADRATIC, Expression.LEVEL2_QUARTIC):
        if n % 2 and is_prime(n):
            return Sign.ZERO, "odd prime"
        if is_power_of(n, 2):
            return Sign.NEGATIVE, "power of two"
        return Sign.POSITIVE, "other"
    if expr is Expression.LEVEL3_QUADRATIC:
        if is_prime(n) and n != 3:
            return Sign.ZERO, "prime other than three"
        if is_power_of(n, 3):
            return Sign.NEGATIVE, "power of three"
        return Sign.POSITIVE, "other"
    residue = 1 if expr is Expression.LATTICE_1MOD4 else 3
    if n % 4 != residue:
        return Sign.NEGATIVE, f"not {residue} mod 4"
    if is_prime(n):
        return Sign.ZERO, f"prime {residue} mod 4"
    return Sign.POSITIVE, f"composite {residue} mod 4"


@dataclass(frozen=True)
class DetectionRow:
    n: int
    value: int
    sign: Sign
    expected: Sign
    label: str

    @property
    def ok(self) -> bool:
        return self.sign is self.expected


@dataclass(frozen=True)
class DetectionReport:
    expression: str
    backend: str
    lo: int
    hi: int
    rows: tuple[DetectionRow, ...]
    violations: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def _classify(expr: ExpressionLike, n: int, backend: str) -> DetectionRow:
    value = evaluate_expression(expr, n, backend)
    expected, label = expected_outcome(expr, n)
    return DetectionRow(n, value, Sign.of(value), expected, label)


def _resolve_threads(threads: int | None) -> int:
    if threads is None:
        raw = os.environ.get("MACMAHON_THREADS", "").strip()
        threads = int(raw) if raw else 1
    return max(1, min(threads, os.cpu_count() or 1))


def _prepare(expr: ExpressionLike, hi: int, backend: str) -> None:
    # Warm every shared cache serially so parallel workers only read.
    if isinstance(expr, Expression) and backend == "formula":
        family = _FAMILY.get(expr)
        if family is not None and family[0] != LEVEL2_CLASSES:
            _warm_tables(family[0], family[1], hi)
    if backend == "bruteforce" and expr in (
        Expression.LATTICE_1MOD4,
        Expression.LATTICE_3MOD4,
    ):
        lattice_count(lattice_e8(), 2 * hi)
        lattice_count(lattice_l1() if expr is Expression.LATTICE_1MOD4 else lattice_l2(), hi)


def detect_range(
    expr: ExpressionLike,
    lo: int,
    hi: int,
    backend: str = "formula",
    threads: int | None = None,
) -> DetectionReport:
    """Evaluate and classify the expression for every n in [lo, hi].

    Work is split across MACMAHON_THREADS workers (or the explicit
    ``threads`` argument) in contiguous chunks; results are merged in order.
    """
    if lo < 2:
        raise ValueError(f"lo must be at least 2, got {lo}")
    if hi < lo:
        raise ValueError(f"empty range [{lo}, {hi}]")
    workers = _resolve_threads(threads)
    _prepare(expr, hi, backend)
    ns = list(range(lo, hi + 1))
    if workers > 1 and len(ns) > 1:
        chunk = -(-len(ns) // workers)
        parts = [ns[i : i + chunk] for i in range(0, len(ns), chunk)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = pool.map(
                lambda part: [_classify(expr, n, backend) for n in part], parts
            )
        rows = tuple(row for part in results for row in part)
    else:
        rows = tuple(_classify(expr, n, backend) for n in ns)
    name = expr.value if isinstance(expr, (Expression, LelievreExpression)) else str(expr)
    return DetectionReport(
        name, backend, lo, hi, rows, tuple(r.n for r in rows if not r.ok)
    )
