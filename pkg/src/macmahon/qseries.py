"""Truncated formal power series with exact rational coefficients.

A ``QSeries`` stores coefficients c_0 .. c_order of a series in one formal
variable (written q throughout, though nothing depends on the name).  Every
binary operation truncates to the minimum order of its operands, so a series
never claims coefficients it cannot actually know.  All arithmetic is exact,
using ``fractions.Fraction``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class QSeries:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        """Build a series from coefficients c_0, c_1, ...

        With an explicit ``order`` the list is padded with zeros (the caller
        asserts the missing coefficients vanish) or truncated.
        """
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        if order is None:
            if not cs:
                raise ValueError("empty coefficient list needs an explicit order")
            order = len(cs) - 1
        if order < 0:
            raise ValueError(f"order must be non-negative, got {order}")
        if len(cs) < order + 1:
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self.coeffs = cs[: order + 1]
        self.order = order

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> QSeries:
        return cls([], order=order)

    @classmethod
    def one(cls, order: int) -> QSeries:
        return cls([1], order=order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff: Scalar = 1) -> QSeries:
        if power < 0:
            raise ValueError(f"power must be non-negative, got {power}")
        s = cls.zero(order)
        if power <= order:
            s.coeffs[power] = Fraction(coeff)
        return s

    @classmethod
    def from_function(cls, f, order: int) -> QSeries:
        """Series whose n-th coefficient is f(n)."""
        return cls([f(n) for n in range(order + 1)])

    # -- basics ------------------------------------------------------------

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, tuple(self.coeffs)))

    def __repr__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*q^{n}")
            if len(terms) == 6:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return f"QSeries({body} + O(q^{self.order + 1}))"

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, order: int) -> QSeries:
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return QSeries(self.coeffs[: order + 1])

    def agrees_with(self, other: QSeries) -> bool:
        """Coefficientwise equality up to the shared truncation order."""
        m = min(self.order, other.order)
        return self.coeffs[: m + 1] == other.coeffs[: m + 1]

    def first_difference(self, other: QSeries) -> int | None:
        """Smallest power where the two series disagree, or None."""
        m = min(self.order, other.order)
        for n in range(m + 1):
            if self.coeffs[n] != other.coeffs[n]:
                return n
        return None

    # -- ring operations ---------------------------------------------------

    def __add__(self, other) -> QSeries:
        if isinstance(other, QSeries):
            m = min(self.order, other.order)
            return QSeries([self.coeffs[n] + other.coeffs[n] for n in range(m + 1)])
        if isinstance(other, (int, Fraction)):
            cs = self.coeffs.copy()
            cs[0] += other
            return QSeries(cs)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> QSeries:
        return QSeries([-c for c in self.coeffs])

    def __sub__(self, other) -> QSeries:
        return self + (-other if isinstance(other, QSeries) else -Fraction(other))

    def __rsub__(self, other) -> QSeries:
        return (-self) + other

    def __mul__(self, other) -> QSeries:
        if isinstance(other, QSeries):
            m = min(self.order, other.order)
            out = [Fraction(0)] * (m + 1)
            for i, a in enumerate(self.coeffs[: m + 1]):
                if not a:
                    continue
                for j in range(m + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
            return QSeries(out)
        if isinstance(other, (int, Fraction)):
            return QSeries([c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> QSeries:
        if not isinstance(exponent, int):
            raise TypeError("series exponent must be an integer")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QSeries.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __truediv__(self, other) -> QSeries:
        if isinstance(other, QSeries):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def inverse(self) -> QSeries:
        """Multiplicative inverse; requires a non-zero constant term."""
        a0 = self.coeffs[0]
        if not a0:
            raise ValueError("series with zero constant term has no inverse")
        out = [Fraction(0)] * (self.order + 1)
        out[0] = Fraction(1) / a0
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for i in range(1, n + 1):
                if self.coeffs[i]:
                    acc += self.coeffs[i] * out[n - i]
            out[n] = -acc / a0
        return QSeries(out)

    # -- operators specific to q-expansions --------------------------------

    def d(self) -> QSeries:
        """The operator q*d/dq: multiplies the n-th coefficient by n."""
        return QSeries([n * c for n, c in enumerate(self.coeffs)])

    def dilate(self, stride: int) -> QSeries:
        """Substitute q -> q**stride, truncated to the original order."""
        if stride < 1:
            raise ValueError(f"stride must be positive, got {stride}")
        out = [Fraction(0)] * (self.order + 1)
        for n in range(0, self.order + 1, stride):
            out[n] = self.coeffs[n // stride]
        return QSeries(out)

    def shift(self, power: int) -> QSeries:
        """Multiply by q**power, truncated to the original order."""
        if power < 0:
            raise ValueError(f"shift power must be non-negative, got {power}")
        return QSeries([Fraction(0)] * power + self.coeffs[: self.order + 1 - power])

    def exp(self) -> QSeries:
        """Formal exponential; requires a zero constant term."""
        if self.coeffs[0]:
            raise ValueError("exp needs a zero constant term")
        out = [Fraction(0)] * (self.order + 1)
        out[0] = Fraction(1)
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for j in range(1, n + 1):
                if self.coeffs[j]:
                    acc += j * self.coeffs[j] * out[n - j]
            out[n] = acc / n
        return QSeries(out)

    def log(self) -> QSeries:
        """Formal logarithm; requires constant term exactly 1."""
        if self.coeffs[0] != 1:
            raise ValueError("log needs constant term 1")
        out = [Fraction(0)] * (self.order + 1)
        for n in range(1, self.order + 1):
            acc = n * self.coeffs[n]
            for j in range(1, n):
                if self.coeffs[n - j]:
                    acc -= j * out[j] * self.coeffs[n - j]
            out[n] = acc / n
        return QSeries(out)

    def compose(self, inner: QSeries) -> QSeries:
        """Formal composition self(inner); inner must have zero constant
        term.  Result is truncated to the minimum of both orders."""
        if inner.coeffs[0]:
            raise ValueError("composition needs an inner series with zero constant term")
        m = min(self.order, inner.order)
        g = inner.truncate(m)
        # Horner evaluation over the coefficient list of the outer series.
        result = QSeries([self.coeffs[m]], order=m)
        for n in range(m - 1, -1, -1):
            result = result * g + self.coeffs[n]
        return result


def apply_d_polynomial(series: QSeries, poly: Iterable[Scalar]) -> QSeries:
    """Apply a polynomial in the operator D = q*d/dq.

    ``poly`` lists coefficients (c_0, c_1, ...) of c_0 + c_1*D + c_2*D^2 + ...
    """
    out = QSeries.zero(series.order)
    power = series
    for j, c in enumerate(poly):
        if j > 0:
            power = power.d()
        if c:
            out = out + power * c
    return out


def arcsin2_series(order: int) -> QSeries:
    """Series of 2*arcsin(X/2) in the formal variable X.

    The n-th odd coefficient is binom(2n, n) / ((2n+1) * 16**n); the series
    is odd with leading term X.
    """
    s = QSeries.zero(order)
    for n in range(0, (order - 1) // 2 + 1 if order >= 1 else 0):
        s.coeffs[2 * n + 1] = Fraction(math.comb(2 * n, n), (2 * n + 1) * 16**n)
    return s
