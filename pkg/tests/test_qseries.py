import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from macmahon.qseries import QSeries, apply_d_polynomial, arcsin2_series

ORDER = 12

small_fraction = st.fractions(
    min_value=-9, max_value=9, max_denominator=5
)


def series(min_order=3, max_order=ORDER, **kwargs):
    return st.lists(small_fraction, min_size=min_order + 1, max_size=max_order + 1).map(
        lambda cs: QSeries(cs)
    )


def unit_series(min_order=3, max_order=ORDER):
    """Series with constant coefficient 1 (invertible, log-friendly)."""
    return st.lists(small_fraction, min_size=min_order, max_size=max_order).map(
        lambda cs: QSeries([Fraction(1)] + cs)
    )


def test_construction_and_indexing():
    f = QSeries([1, 2, 3])
    assert f.order == 2
    assert f[0] == 1 and f[2] == 3
    with pytest.raises(IndexError):
        f[3]
    g = QSeries([1], order=4)
    assert g[4] == 0 and g.order == 4


def test_basic_builders():
    assert QSeries.zero(3) == QSeries([0, 0, 0, 0])
    assert QSeries.one(2) == QSeries([1, 0, 0])
    assert QSeries.monomial(2, 4, 7) == QSeries([0, 0, 7, 0, 0])
    f = QSeries.from_function(lambda n: n * n, 4)
    assert [f[n] for n in range(5)] == [0, 1, 4, 9, 16]


def test_equality_is_strict_about_order():
    assert QSeries([1, 2]) != QSeries([1, 2, 0])
    assert QSeries([1, 2]).agrees_with(QSeries([1, 2, 0]))
    assert QSeries([1, 2, 0]).truncate(1) == QSeries([1, 2])
    with pytest.raises(ValueError):
        QSeries([1, 2]).truncate(5)


def test_first_difference():
    f = QSeries([1, 2, 3, 4])
    g = QSeries([1, 2, 0, 4])
    assert f.first_difference(g) == 2
    assert f.first_difference(f) is None


def test_min_order_truncation_semantics():
    f = QSeries([1, 1, 1, 1, 1])
    g = QSeries([1, 1])
    assert (f + g).order == 1
    assert (f * g).order == 1


def test_geometric_series_inverse():
    one_minus_q = QSeries([1, -1], order=10)
    geo = one_minus_q.inverse()
    assert all(geo[n] == 1 for n in range(11))
    assert (one_minus_q * geo) == QSeries.one(10)


def test_inverse_requires_unit():
    with pytest.raises(ValueError):
        QSeries([0, 1, 2]).inverse()


def test_division_and_scalar_paths():
    f = QSeries([2, 4, 6])
    assert f / 2 == QSeries([1, 2, 3])
    assert f / QSeries([1, 0, 0]) == f
    assert 2 + QSeries([1, 1]) == QSeries([3, 1])
    assert QSeries([3, 1]) - 1 == QSeries([2, 1])


def test_pow():
    f = QSeries([1, 1], order=6)
    assert f**3 == f * f * f
    assert f**0 == QSeries.one(6)
    # negative powers go through the inverse
    assert f**-2 == (f.inverse()) ** 2


def test_d_operator():
    f = QSeries([5, 1, 2, 3])
    assert f.d() == QSeries([0, 1, 4, 9])


def test_dilate_and_shift():
    f = QSeries([1, 2, 3], order=6)
    assert f.dilate(2) == QSeries([1, 0, 2, 0, 3, 0, 0])
    assert f.shift(2) == QSeries([0, 0, 1, 2, 3, 0, 0])
    with pytest.raises(ValueError):
        f.dilate(0)


def test_exp_log_known_series():
    q = QSeries.monomial(1, 6)
    e = q.exp()
    assert [e[n] for n in range(5)] == [
        1,
        1,
        Fraction(1, 2),
        Fraction(1, 6),
        Fraction(1, 24),
    ]
    # log(1/(1-q)) = sum q^n / n
    geo = QSeries([1, -1], order=8).inverse()
    lg = geo.log()
    assert all(lg[n] == Fraction(1, n) for n in range(1, 9))


def test_exp_log_preconditions():
    with pytest.raises(ValueError):
        QSeries([1, 1]).exp()
    with pytest.raises(ValueError):
        QSeries([0, 1]).log()


def test_compose_requires_zero_constant():
    f = QSeries([1, 1, 1])
    with pytest.raises(ValueError):
        f.compose(QSeries([1, 1, 0]))


def test_compose_known():
    # f(X) = 1 + X + X^2 at X = q + q^2:
    # 1 + (q + q^2) + (q^2 + 2q^3 + q^4)
    f = QSeries([1, 1, 1], order=4)
    inner = QSeries([0, 1, 1], order=4)
    got = f.compose(inner)
    assert [got[n] for n in range(5)] == [1, 1, 2, 2, 1]
    # mismatched orders truncate to the shorter operand
    assert f.truncate(2).compose(inner).order == 2


def test_apply_d_polynomial():
    f = QSeries([0, 1, 1, 1])
    # (3 + D^2) f has coefficient 3 + n^2 at q^n
    got = apply_d_polynomial(f, [3, 0, 1])
    assert [got[n] for n in range(4)] == [0, 4, 7, 12]


def test_arcsin_like_series_inverts_sine():
    # t(U) = 2*sin(U/2) as a formal series; composing with the
    # 2*arcsin(X/2) series must give back plain X
    order = 15
    sin2 = QSeries.zero(order)
    for n in range(0, (order - 1) // 2 + 1):
        sin2.coeffs[2 * n + 1] = Fraction((-1) ** n, 4**n * math.factorial(2 * n + 1))
    arc = arcsin2_series(order)
    assert sin2.compose(arc) == QSeries.monomial(1, order)
    assert arc.compose(sin2) == QSeries.monomial(1, order)


def test_arcsin_like_series_leading_terms():
    arc = arcsin2_series(7)
    assert arc[1] == 1
    assert arc[3] == Fraction(1, 24)
    assert arc[5] == Fraction(3, 640)
    assert arc[7] == Fraction(5, 7168)
    assert arc[2] == 0 and arc[4] == 0


@given(series(), series(), series())
@settings(max_examples=60)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert (f + g) + h == f + (g + h)
    assert f * g == g * f
    lhs = (f * g) * h
    assert lhs == f * (g * h)
    assert f * (g + h) == f * g + f * h


@given(series(), series())
@settings(max_examples=60)
def test_d_is_a_derivation(f, g):
    assert (f * g).d() == f.d() * g + f * g.d()


@given(unit_series())
@settings(max_examples=40)
def test_log_exp_roundtrip(f):
    assert f.log().exp() == f


@given(unit_series())
@settings(max_examples=40)
def test_inverse_roundtrip(f):
    assert f * f.inverse() == QSeries.one(f.order)


@given(st.lists(small_fraction, min_size=3, max_size=10))
@settings(max_examples=40)
def test_exp_log_roundtrip(tail):
    f = QSeries([Fraction(0)] + tail)
    assert f.exp().log() == f


def test_hash_consistency():
    a = QSeries([1, Fraction(2, 1)])
    b = QSeries([Fraction(1), 2])
    assert a == b and hash(a) == hash(b)
