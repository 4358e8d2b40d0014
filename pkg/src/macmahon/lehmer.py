"""Lehmer-style universal polynomials and the sparse polynomial arithmetic
they need.

``MultiPoly`` is a sparse polynomial over even-indexed variables x2, x4, x6,
... with exact rational coefficients.  ``PolySeries`` is a truncated power
series in an auxiliary variable X whose coefficients are such polynomials.
``lehmer_polynomials`` reads off the family Lambda_1, Lambda_2, ... from the
X^(2k) coefficients of

    exp( 2 * sum_{j>=1} ((-1)^(j-1) / (2j)!) * (2*arcsin(X/2))^(2j) * x_{2j} )

This is the generating definition that makes the partition sums below a
polynomial expression in divisor-sum series.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .numtheory import bernoulli
from .qseries import QSeries, arcsin2_series

Monomial = tuple[int, ...]  # exponents by position p, variable x_{2(p+1)}


def _trim(exps: Iterable[int]) -> Monomial:
    out = list(exps)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _var_position(index: int) -> int:
    if index < 2 or index % 2:
        raise ValueError(f"variable index must be a positive even integer, got {index}")
    return index // 2 - 1


class MultiPoly:
    """Sparse multivariate polynomial over x2, x4, x6, ... with Fraction
    coefficients.  Zero coefficients are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[_trim(mono)] = c
        self.terms = clean

    @classmethod
    def zero(cls) -> MultiPoly:
        return cls()

    @classmethod
    def constant(cls, c) -> MultiPoly:
        return cls({(): Fraction(c)})

    @classmethod
    def variable(cls, index: int) -> MultiPoly:
        pos = _var_position(index)
        return cls({tuple([0] * pos + [1]): Fraction(1)})

    @classmethod
    def one(cls) -> MultiPoly:
        return cls.constant(1)

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def constant_term(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    @property
    def variables(self) -> list[int]:
        """Sorted even variable indices that actually occur."""
        out: set[int] = set()
        for mono in self.terms:
            for p, e in enumerate(mono):
                if e:
                    out.add(2 * (p + 1))
        return sorted(out)

    def coefficient(self, mono: Iterable[int]) -> Fraction:
        return self.terms.get(_trim(mono), Fraction(0))

    @property
    def weight(self) -> int:
        """Largest weight of a monomial, giving x_{2j} weight 2j."""
        best = 0
        for mono in self.terms:
            best = max(best, sum(2 * (p + 1) * e for p, e in enumerate(mono)))
        return best

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> MultiPoly:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            new = terms.get(mono, Fraction(0)) + c
            if new:
                terms[mono] = new
            else:
                terms.pop(mono, None)
        out = MultiPoly.__new__(MultiPoly)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        out = MultiPoly.__new__(MultiPoly)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other) -> MultiPoly:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> MultiPoly:
        return (-self) + other

    def __mul__(self, other) -> MultiPoly:
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            out = MultiPoly.__new__(MultiPoly)
            out.terms = {m: v * c for m, v in self.terms.items()} if c else {}
            return out
        if not isinstance(other, MultiPoly):
            return NotImplemented
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                width = max(len(m1), len(m2))
                mono = _trim(
                    (m1[p] if p < len(m1) else 0) + (m2[p] if p < len(m2) else 0)
                    for p in range(width)
                )
                new = terms.get(mono, Fraction(0)) + c1 * c2
                if new:
                    terms[mono] = new
                else:
                    terms.pop(mono, None)
        out = MultiPoly.__new__(MultiPoly)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __truediv__(self, other) -> MultiPoly:
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, e: int) -> MultiPoly:
        if e < 0:
            raise ValueError("negative polynomial powers are not defined")
        out = MultiPoly.one()
        for _ in range(e):
            out = out * self
        return out

    # -- structural operations ----------------------------------------------

    def scale_variables(self, factors: Mapping[int, Fraction]) -> MultiPoly:
        """Substitute x_index -> factors[index] * x_index for each mapped
        variable; unmapped variables stay fixed."""
        pos_factor = {_var_position(i): Fraction(f) for i, f in factors.items()}
        terms: dict[Monomial, Fraction] = {}
        for mono, c in self.terms.items():
            for p, e in enumerate(mono):
                if e and p in pos_factor:
                    c = c * pos_factor[p] ** e
            if c:
                terms[mono] = terms.get(mono, Fraction(0)) + c
        return MultiPoly(terms)

    def evaluate(self, args: Mapping[int, QSeries], order: int | None = None) -> QSeries:
        """Evaluate at q-series arguments, one per occurring variable.

        All argument series must share one truncation order (which also
        fixes the output order; for a constant polynomial with no arguments
        an explicit ``order`` is required).
        """
        orders = {s.order for s in args.values()}
        if order is None:
            if len(orders) > 1:
                raise ValueError(
                    f"argument series must share one order, got {sorted(orders)}"
                )
            if not orders:
                raise ValueError("constant evaluation needs an explicit order")
            order = next(iter(orders))
        elif orders and order > min(orders):
            raise ValueError(
                f"target order {order} exceeds shortest argument order {min(orders)}"
            )
        missing = [v for v in self.variables if v not in args]
        if missing:
            raise ValueError(f"no series bound for variables {missing}")

        powers: dict[int, list[QSeries]] = {}

        def power(index: int, e: int) -> QSeries:
            cache = powers.setdefault(
                index, [QSeries.one(order), args[index].truncate(order)]
            )
            while len(cache) <= e:
                cache.append(cache[-1] * cache[1])
            return cache[e]

        total = QSeries.zero(order)
        for mono, c in self.terms.items():
            term = QSeries.one(order) * c
            for p, e in enumerate(mono):
                if e:
                    term = term * power(2 * (p + 1), e)
            total = total + term
        return total

    # -- rendering -----------------------------------------------------------

    def _sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        width = max((len(m) for m in self.terms), default=0)

        def key(item):
            mono = item[0]
            padded = tuple(mono[p] if p < len(mono) else 0 for p in range(width))
            return (sum(mono), padded)

        return sorted(self.terms.items(), key=key, reverse=True)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"MultiPoly({format_poly(self)})"


def _format_monomial(mono: Monomial) -> str:
    parts = []
    for p, e in enumerate(mono):
        if e == 1:
            parts.append(f"x{2 * (p + 1)}")
        elif e > 1:
            parts.append(f"x{2 * (p + 1)}^{e}")
    return "*".join(parts)


def format_poly(p: MultiPoly) -> str:
    """Canonical text form with the common denominator factored out, e.g.
    ``1/12 * (6*x2^2 + x2 - x4)``."""
    if p.is_zero:
        return "0"
    items = p._sorted_terms()
    if len(items) == 1 and items[0][0] == ():
        return str(items[0][1])
    nums = [c.numerator for c in p.terms.values()]
    dens = [c.denominator for c in p.terms.values()]
    content = Fraction(math.gcd(*nums), math.lcm(*dens))
    if items[0][1] < 0:
        # absorb the sign so the leading printed term is positive
        content = -content
    body_terms = []
    for mono, c in items:
        c = c / content
        assert c.denominator == 1
        c = c.numerator
        mono_s = _format_monomial(mono)
        if not mono_s:
            chunk = str(abs(c))
        elif abs(c) == 1:
            chunk = mono_s
        else:
            chunk = f"{abs(c)}*{mono_s}"
        sign = "-" if c < 0 else "+"
        body_terms.append((sign, chunk))
    first_sign, first_chunk = body_terms[0]
    body = ("-" if first_sign == "-" else "") + first_chunk
    for sign, chunk in body_terms[1:]:
        body += f" {sign} {chunk}"
    if content == 1:
        return body
    if len(body_terms) == 1 and first_sign == "+":
        return f"{content} * {body}"
    return f"{content} * ({body})"


class PolySeries:
    """Truncated power series in the auxiliary variable X whose coefficients
    are MultiPoly values.  Mirrors the QSeries contracts: binary operations
    truncate to the minimum order, exp and log demand the usual constant
    terms."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[MultiPoly], order: int | None = None):
        cs = list(coeffs)
        if order is None:
            if not cs:
                raise ValueError("empty coefficient list needs an explicit order")
            order = len(cs) - 1
        if len(cs) < order + 1:
            cs.extend([MultiPoly.zero()] * (order + 1 - len(cs)))
        self.coeffs = cs[: order + 1]
        self.order = order

    @classmethod
    def zero(cls, order: int) -> PolySeries:
        return cls([], order=order)

    def __getitem__(self, n: int) -> MultiPoly:
        return self.coeffs[n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolySeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __add__(self, other: PolySeries) -> PolySeries:
        m = min(self.order, other.order)
        return PolySeries([self.coeffs[n] + other.coeffs[n] for n in range(m + 1)])

    def __mul__(self, other: PolySeries) -> PolySeries:
        m = min(self.order, other.order)
        out = [MultiPoly.zero() for _ in range(m + 1)]
        for i in range(m + 1):
            a = self.coeffs[i]
            if a.is_zero:
                continue
            for j in range(m + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return PolySeries(out)

    def exp(self) -> PolySeries:
        if not self.coeffs[0].is_zero:
            raise ValueError("exp needs a zero constant term")
        out = [MultiPoly.zero() for _ in range(self.order + 1)]
        out[0] = MultiPoly.one()
        for n in range(1, self.order + 1):
            acc = MultiPoly.zero()
            for j in range(1, n + 1):
                if not self.coeffs[j].is_zero:
                    acc = acc + self.coeffs[j] * out[n - j] * j
            out[n] = acc / n
        return PolySeries(out)

    def log(self) -> PolySeries:
        if self.coeffs[0] != MultiPoly.one():
            raise ValueError("log needs constant term 1")
        out = [MultiPoly.zero() for _ in range(self.order + 1)]
        for n in range(1, self.order + 1):
            acc = self.coeffs[n] * n
            for j in range(1, n):
                if not self.coeffs[n - j].is_zero:
                    acc = acc - out[j] * self.coeffs[n - j] * j
            out[n] = acc / n
        return PolySeries(out)


def generating_exponent(kmax: int, order: int | None = None) -> PolySeries:
    """The argument of the defining exponential: a series in X whose
    coefficients are linear in x2 .. x_{2*kmax}."""
    if kmax < 1:
        raise ValueError(f"kmax must be positive, got {kmax}")
    if order is None:
        order = 2 * kmax
    arc = arcsin2_series(order)
    arc2 = arc * arc
    coeffs = [MultiPoly.zero() for _ in range(order + 1)]
    power = QSeries.one(order)
    for j in range(1, kmax + 1):
        power = power * arc2  # arc^(2j)
        weight = Fraction(2 * (-1) ** (j - 1), math.factorial(2 * j))
        var = MultiPoly.variable(2 * j)
        for i in range(2 * j, order + 1):
            c = power[i]
            if c:
                coeffs[i] = coeffs[i] + var * (weight * c)
    return PolySeries(coeffs)


@lru_cache(maxsize=None)
def lehmer_polynomials(kmax: int) -> tuple[MultiPoly, ...]:
    """Lambda_1 .. Lambda_kmax, read off the even X-powers of the generating
    exponential.  The X^(2k) coefficient is Lambda_k."""
    series = generating_exponent(kmax).exp()
    for n in range(1, 2 * kmax + 1, 2):
        if not series.coeffs[n].is_zero:
            raise ArithmeticError(f"odd X-power {n} unexpectedly non-zero")
    return tuple(series.coeffs[2 * k] for k in range(1, kmax + 1))


def lehmer_polynomial(k: int) -> MultiPoly:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return lehmer_polynomials(k)[k - 1]


def omega_polynomial(k: int) -> MultiPoly:
    """Lehmer's original normalization: rescale each variable by the matching
    negated Bernoulli number, then scale by (-1)^k (2k)! / (2 B_{2k})."""
    lam = lehmer_polynomial(k)
    substituted = lam.scale_variables({2 * j: -bernoulli(2 * j) for j in range(1, k + 1)})
    factor = Fraction((-1) ** k * math.factorial(2 * k)) / (2 * bernoulli(2 * k))
    return substituted * factor


def evaluate_at_series(p: MultiPoly, args: Mapping[int, QSeries], order: int | None = None) -> QSeries:
    """Polynomial evaluation with q-series arguments (see MultiPoly.evaluate)."""
    return p.evaluate(args, order)
