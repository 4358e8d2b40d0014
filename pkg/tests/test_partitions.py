from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from macmahon.numtheory import residue_classes, sigma
from macmahon.partitions import (
    VARIANTS,
    MacMahonParams,
    macmahon_bruteforce,
    macmahon_coeff_tables,
    macmahon_series,
    variant_params,
    variant_series,
    verify_main_identity,
)

EVERY = residue_classes(1, [0])
ODD = residue_classes(2, [1])

# depth-2 and depth-3 values over unrestricted widths, worked out by
# enumerating (m1 < m2 < ...) with sum m_i*d_i = n by hand
M2_VALUES = [0, 0, 0, 1, 3, 9, 15, 30, 45, 67, 99, 135, 175]
M3_VALUES = {6: 1, 7: 3, 8: 9, 9: 22}

# odd-width depth 2 (hand enumeration over m in {1,3,5,...})
C2_VALUES = {4: 1, 5: 2, 6: 4, 7: 8, 8: 14}


def test_params_validation():
    MacMahonParams(EVERY, 1, 1)
    with pytest.raises(ValueError):
        MacMahonParams(EVERY, 1, 0)
    with pytest.raises(ValueError):
        MacMahonParams(EVERY, 0, 1)
    with pytest.raises(ValueError):
        MacMahonParams(EVERY, 2, 2)


def test_depth_one_is_divisor_sum():
    s = macmahon_series(MacMahonParams(EVERY, 1, 1), 30)
    for n in range(1, 31):
        assert s[n] == sigma(n)


def test_depth_two_frozen_values():
    s = macmahon_series(MacMahonParams(EVERY, 1, 2), 12)
    assert [int(s[n]) for n in range(13)] == M2_VALUES


def test_depth_three_frozen_values():
    s = macmahon_series(MacMahonParams(EVERY, 1, 3), 9)
    assert all(int(s[n]) == 0 for n in range(6))
    for n, want in M3_VALUES.items():
        assert int(s[n]) == want


def test_odd_width_frozen_values():
    s = macmahon_series(MacMahonParams(ODD, 1, 2), 8)
    for n, want in C2_VALUES.items():
        assert int(s[n]) == want


def test_eps_flip_small_values():
    # hand check: n=4 -> (1,3) widths with unit heights, weight (-1)(-1)=1;
    # n=5 -> heights (2,1), weight (+2)(-1)=-2
    p = MacMahonParams(ODD, -1, 2)
    assert macmahon_bruteforce(p, 4) == 1
    assert macmahon_bruteforce(p, 5) == -2
    assert macmahon_bruteforce(p, 6) == 4


def test_bruteforce_edge_cases():
    p = MacMahonParams(EVERY, 1, 2)
    assert macmahon_bruteforce(p, 0) == 0
    assert macmahon_bruteforce(p, 1) == 0
    assert macmahon_bruteforce(p, 2) == 0
    assert macmahon_bruteforce(p, 3) == 1
    with pytest.raises(ValueError):
        macmahon_bruteforce(p, -1)


def test_tables_match_series():
    tabs = macmahon_coeff_tables(EVERY, 1, 3, 20)
    assert tabs[0][0] == 1 and all(v == 0 for v in tabs[0][1:])
    for k in (1, 2, 3):
        s = macmahon_series(MacMahonParams(EVERY, 1, k), 20)
        assert tabs[k] == [int(s[n]) for n in range(21)]


def test_series_equals_bruteforce_battery():
    cases = [
        (EVERY, 1), (EVERY, -1), (ODD, 1), (ODD, -1),
        (residue_classes(5, [1, 4]), 1),
        (residue_classes(5, [2, 3]), -1),
        (residue_classes(3, [1, 2]), 1),
        (residue_classes(4, [0]), 1),
        (residue_classes(6, [1, 5]), -1),
    ]
    for classes, eps in cases:
        for k in (1, 2, 3):
            p = MacMahonParams(classes, eps, k)
            s = macmahon_series(p, 18)
            for n in range(19):
                assert int(s[n]) == macmahon_bruteforce(p, n), (classes, eps, k, n)


@given(
    st.integers(min_value=1, max_value=6),
    st.integers(min_value=1, max_value=3),
    st.sampled_from([1, -1]),
    st.data(),
)
@settings(max_examples=30, deadline=None)
def test_series_equals_bruteforce_random(modulus, k, eps, data):
    residues = data.draw(
        st.frozensets(st.integers(min_value=0, max_value=modulus - 1), min_size=1)
    )
    p = MacMahonParams(residue_classes(modulus, residues), eps, k)
    s = macmahon_series(p, 14)
    for n in range(15):
        assert int(s[n]) == macmahon_bruteforce(p, n)


def test_variant_table_complete():
    assert sorted(VARIANTS) == list("ABCDEFGH")
    a = variant_params("A", 2)
    assert a.classes == EVERY and a.eps == 1 and a.k == 2
    d = variant_params("D", 3)
    assert d.classes == ODD and d.eps == -1
    with pytest.raises(ValueError):
        variant_params("Z", 1)


def test_signed_variants_flip_odd_depths():
    # the signed families carry (-1)^k, so odd depths negate
    base = MacMahonParams(ODD, -1, 1)
    raw = macmahon_series(base, 10)
    signed = variant_series("D", 1, 10)
    assert signed == -raw
    assert variant_series("D", 2, 10) == macmahon_series(
        MacMahonParams(ODD, -1, 2), 10
    )


def test_main_identity_all_variants():
    for letter in sorted(VARIANTS):
        for k in (1, 2, 3):
            rep = verify_main_identity(variant_params(letter, k), 40)
            assert rep.ok and rep.status == "ExactMatch"
            assert rep.first_mismatch is None
            assert rep.order == 40


def test_main_identity_asymmetric_set():
    # holds for any residue set, symmetric or not
    rep = verify_main_identity(MacMahonParams(residue_classes(4, [1]), 1, 3), 35)
    assert rep.ok


def test_series_coefficients_are_integers():
    s = macmahon_series(MacMahonParams(residue_classes(5, [2, 3]), -1, 3), 25)
    for n in range(26):
        assert s[n].denominator == 1
        assert isinstance(s[n], Fraction)
