"""Exact arithmetic for generalized MacMahon partition sums.

The package computes truncated q-expansions of partition generating
functions over residue-gated parts, rewrites them through the universal
polynomials in divisor-sum series, decomposes them in quasi-modular bases,
and evaluates the integer sign expressions whose zeros mark primes.  All
coefficients are Fractions or Python ints; nothing here is floating point
except inside the lattice enumeration's integer kernel.
"""

from .detector import (
    DetectionReport,
    DetectionRow,
    Expression,
    LelievreExpression,
    Sign,
    detect_range,
    evaluate_expression,
    expected_outcome,
    lelievre_coeff,
    lelievre_series,
    partition_sum,
)
from .eisenstein import (
    DecompositionResult,
    coprime_g,
    decompose_in_basis,
    delta2,
    delta3,
    eisenstein_e,
    eisenstein_e2_level,
    eisenstein_g,
    level2_g,
    level2_partition_value,
    mixed_weight_basis_level2,
    modular_basis_level2,
    quasimodular_basis_level2,
)
from .identities import CheckResult, run_identity_suite
from .lattice import (
    CATALOG_NAMES,
    ShiftedLattice,
    ThetaSeries,
    catalog,
    lattice_count,
    lattice_count_formula,
    lattice_e8,
    lattice_l1,
    lattice_l2,
    theta_series,
)
from .lehmer import (
    MultiPoly,
    PolySeries,
    evaluate_at_series,
    lehmer_polynomial,
    lehmer_polynomials,
    omega_polynomial,
)
from .numtheory import (
    ResidueClassSet,
    bernoulli,
    divisor_sum_general,
    divisors,
    is_prime,
    moebius,
    primes_up_to,
    residue_classes,
    sigma,
)
from .partitions import (
    VARIANTS,
    IdentityReport,
    MacMahonParams,
    macmahon_bruteforce,
    macmahon_coeff_tables,
    macmahon_series,
    variant_params,
    variant_series,
    verify_main_identity,
)
from .qseries import QSeries, arcsin2_series

__version__ = "0.1.0"

__all__ = [
    "CATALOG_NAMES",
    "CheckResult",
    "DecompositionResult",
    "DetectionReport",
    "DetectionRow",
    "Expression",
    "IdentityReport",
    "LelievreExpression",
    "MacMahonParams",
    "MultiPoly",
    "PolySeries",
    "QSeries",
    "ResidueClassSet",
    "ShiftedLattice",
    "Sign",
    "ThetaSeries",
    "VARIANTS",
    "arcsin2_series",
    "bernoulli",
    "catalog",
    "coprime_g",
    "decompose_in_basis",
    "delta2",
    "delta3",
    "detect_range",
    "divisor_sum_general",
    "divisors",
    "eisenstein_e",
    "eisenstein_e2_level",
    "eisenstein_g",
    "evaluate_at_series",
    "evaluate_expression",
    "expected_outcome",
    "is_prime",
    "lattice_count",
    "lattice_count_formula",
    "lattice_e8",
    "lattice_l1",
    "lattice_l2",
    "lehmer_polynomial",
    "lehmer_polynomials",
    "lelievre_coeff",
    "lelievre_series",
    "level2_g",
    "level2_partition_value",
    "macmahon_bruteforce",
    "macmahon_coeff_tables",
    "macmahon_series",
    "mixed_weight_basis_level2",
    "modular_basis_level2",
    "moebius",
    "omega_polynomial",
    "partition_sum",
    "primes_up_to",
    "quasimodular_basis_level2",
    "residue_classes",
    "run_identity_suite",
    "sigma",
    "theta_series",
    "variant_params",
    "variant_series",
    "verify_main_identity",
]
