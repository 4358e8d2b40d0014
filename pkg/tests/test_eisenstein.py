from fractions import Fraction

import pytest

from macmahon.eisenstein import (
    EtaProductSpec,
    coprime_g,
    decompose_in_basis,
    delta2,
    delta3,
    eisenstein_e,
    eisenstein_e2_level,
    eisenstein_g,
    eta_product,
    level2_g,
    level2_partition_value,
    mixed_weight_basis_level2,
    modular_basis_level2,
    quasimodular_basis_level2,
)
from macmahon.numtheory import residue_classes, sigma, sigma_odd_cofactor
from macmahon.partitions import MacMahonParams, macmahon_series
from macmahon.qseries import QSeries

# classical expansions
E2_HEAD = [1, -24, -72, -96, -168, -144, -288, -192, -360, -312, -432]
E4_HEAD = [1, 240, 2160, 6720, 17520, 30240, 60480, 82560, 140400]
E6_HEAD = [1, -504, -16632, -122976, -532728, -1575504]
E8_HEAD = [1, 480, 61920, 1050240, 7926240]

# eta product coefficients, expanded independently by repeated
# polynomial multiplication (Hecke relations spot-checked: a4 = a2^2,
# a6 = a2*a3, a9 = a3^2 - 3^7 for the weight 8 form)
DELTA2_HEAD = [0, 1, -8, 12, 64, -210, -96, 1016, -512, -2043, 1680,
               1092, 768, 1382, -8128, -2520, 4096]
DELTA3_HEAD = [0, 1, -6, 9, 4, 6, -54, -40, 168, 81, -36, -564, 36,
               638, 240, 54, -1136]

ODD = residue_classes(2, [1])


def test_eisenstein_e_heads():
    for k, head in ((2, E2_HEAD), (4, E4_HEAD), (6, E6_HEAD), (8, E8_HEAD)):
        e = eisenstein_e(k, len(head) - 1)
        assert [e[n] for n in range(len(head))] == head, k


def test_eisenstein_e_rejects_odd_weight():
    with pytest.raises(ValueError):
        eisenstein_e(3, 10)
    with pytest.raises(ValueError):
        eisenstein_e(0, 10)


def test_eisenstein_g_is_generic_divisor_series():
    g = eisenstein_g(ODD, 1, 2, 30)
    assert g[0] == 0
    for n in range(1, 31):
        assert g[n] == sigma_odd_cofactor(n, 1)


def test_coprime_g_level_one_is_sigma():
    g = coprime_g(1, 4, 20)
    for n in range(1, 21):
        assert g[n] == sigma(n, 3)


def test_coprime_g_level_two():
    g = coprime_g(2, 2, 40)
    for n in range(1, 41):
        want = sigma(n) - (sigma(n // 2) if n % 2 == 0 else 0)
        assert g[n] == want


def test_level2_g_equals_odd_cofactor_series():
    assert level2_g(4, 25) == eisenstein_g(ODD, 1, 4, 25)


def test_e2_level_head():
    # E2 - 2*E2(q^2), expanded by hand from the sigma values
    e = eisenstein_e2_level(2, 6)
    assert [e[n] for n in range(7)] == [-1, -24, -24, -96, -24, -144, -96]


def test_e2_level_dilation_relation():
    e2 = eisenstein_e(2, 50)
    for level in (2, 3, 4, 5, 6):
        lhs = e2.dilate(level)
        rhs = (e2 - eisenstein_e2_level(level, 50)) / level
        assert lhs == rhs, level


def test_delta2_head():
    d = delta2(16)
    assert [int(d[n]) for n in range(17)] == DELTA2_HEAD


def test_delta3_head():
    d = delta3(16)
    assert [int(d[n]) for n in range(17)] == DELTA3_HEAD


def test_eta_product_with_inverse_factors():
    # 1/euler(1) is the ordinary partition generating function
    spec = EtaProductSpec(((1, -1),), 0)
    p = eta_product(spec, 10)
    assert [int(p[n]) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_level2_partition_value_matches_series():
    series = {
        k: macmahon_series(MacMahonParams(ODD, 1, k), 64) for k in (1, 2, 3, 4)
    }
    for k in (1, 2, 3, 4):
        for n in range(1, 65):
            assert level2_partition_value(k, n) == int(series[k][n]), (k, n)


def test_level2_partition_value_validation():
    with pytest.raises(ValueError):
        level2_partition_value(0, 5)
    with pytest.raises(ValueError):
        level2_partition_value(5, 5)
    with pytest.raises(ValueError):
        level2_partition_value(1, 0)


def test_modular_basis_shapes():
    assert [lbl for lbl, _ in modular_basis_level2(2, 10)] == ["E2|2"]
    assert [lbl for lbl, _ in modular_basis_level2(4, 10)] == ["E4", "G4^(2)"]
    assert [lbl for lbl, _ in modular_basis_level2(6, 10)] == ["E6", "G6^(2)"]
    assert [lbl for lbl, _ in modular_basis_level2(8, 10)] == ["E8", "G8^(2)", "Delta2"]
    with pytest.raises(ValueError):
        modular_basis_level2(10, 10)


def test_quasimodular_basis_shapes():
    labels = [lbl for lbl, _ in quasimodular_basis_level2(4, 10)]
    assert labels == ["E4", "G4^(2)", "D^1 E2|2", "D^1 G2^(2)"]
    assert len(quasimodular_basis_level2(2, 10)) == 2
    assert len(quasimodular_basis_level2(6, 10)) == 6
    assert len(quasimodular_basis_level2(8, 10)) == 9


def test_mixed_weight_basis_is_concatenation():
    mixed = mixed_weight_basis_level2(6, 12)
    assert len(mixed) == 6 + 4 + 2
    # weights descend
    labels = [lbl for lbl, _ in mixed]
    assert labels[:6] == [lbl for lbl, _ in quasimodular_basis_level2(6, 12)]
    assert labels[6:10] == [lbl for lbl, _ in quasimodular_basis_level2(4, 12)]


def test_decompose_recovers_random_combination():
    basis = [s for _, s in mixed_weight_basis_level2(4, 24)]
    coeffs = [Fraction(3), Fraction(0), Fraction(-1, 2),
              Fraction(5, 7), Fraction(0), Fraction(2)]
    target = QSeries.zero(24)
    for c, b in zip(coeffs, basis):
        target = target + b * c
    res = decompose_in_basis(target, basis)
    assert res.status == "ExactMatch"
    assert res.ok
    assert list(res.coefficients) == coeffs
    assert res.verified_order == 24


def test_decompose_reports_mismatch():
    # the level 3 cusp form is not a level 2 modular form of weight 6
    basis = [s for _, s in modular_basis_level2(6, 30)]
    res = decompose_in_basis(delta3(30), basis)
    assert res.status == "Mismatch"
    assert not res.ok
    assert res.first_mismatch == 2
    # the failed candidate is kept for inspection
    assert res.coefficients is not None


def test_decompose_underdetermined():
    e4 = eisenstein_e(4, 20)
    res = decompose_in_basis(e4, [e4, e4 * 2])
    assert res.status == "Underdetermined"
    assert not res.ok


def test_decompose_probe_validation():
    e4 = eisenstein_e(4, 20)
    basis = [s for _, s in modular_basis_level2(4, 20)]
    with pytest.raises(ValueError):
        decompose_in_basis(e4, basis, probe=1)
    with pytest.raises(ValueError):
        decompose_in_basis(e4, basis, probe=50)
    with pytest.raises(ValueError):
        decompose_in_basis(e4, [])


def test_decompose_finds_eisenstein_in_basis():
    basis = [s for _, s in modular_basis_level2(8, 30)]
    res = decompose_in_basis(eisenstein_e(8, 30), basis)
    assert res.ok
    assert list(res.coefficients) == [1, 0, 0]
