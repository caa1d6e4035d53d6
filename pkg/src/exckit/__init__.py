"""Exact invariants of exceptional sets with filtered conormal bundles.

Degree vectors ``a`` are always *conormal* degrees: the conormal bundle is
filtered by ``O_Z(a_i)`` and a split normal bundle is ``sum O_Z(-a_i)``.
"""

from exckit.admissibility import (
    AdmissibleCatalog,
    InequalityReport,
    check_filtration,
    check_split,
    codim2_odd_check,
    crepant_filter,
    enumerate_admissible,
    p1_specialization,
    theorem_sum,
)
from exckit.charpoly import (
    RationalPolynomial,
    interpolate,
    leading_coeff_I,
    leading_coeff_J,
    partial_sum_I,
    partial_sum_J,
)
from exckit.combinatorics import (
    CombLemmaCoeffs,
    binomial,
    comb_lemma_coefficients,
    finite_difference,
    power_sum_compositions,
    shifted_difference,
)
from exckit.graded import (
    Geometry,
    NumericalClass,
    TwistMultiset,
    graded_piece_I,
    graded_piece_J,
    numerical_class,
    symmetric_power,
    tensor,
)
from exckit.lattice import DoublingPattern, compositions, exponent_set_T, weighted_compositions
from exckit.singularity import (
    HilbertProfile,
    HypothesisError,
    embedding_dimension,
    hilbert_profile,
    hilbert_value,
    rationality_flag,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibleCatalog",
    "CombLemmaCoeffs",
    "DoublingPattern",
    "Geometry",
    "HilbertProfile",
    "HypothesisError",
    "InequalityReport",
    "NumericalClass",
    "RationalPolynomial",
    "TwistMultiset",
    "binomial",
    "check_filtration",
    "check_split",
    "codim2_odd_check",
    "comb_lemma_coefficients",
    "compositions",
    "crepant_filter",
    "embedding_dimension",
    "enumerate_admissible",
    "exponent_set_T",
    "finite_difference",
    "graded_piece_I",
    "graded_piece_J",
    "hilbert_profile",
    "hilbert_value",
    "interpolate",
    "leading_coeff_I",
    "leading_coeff_J",
    "numerical_class",
    "p1_specialization",
    "partial_sum_I",
    "partial_sum_J",
    "power_sum_compositions",
    "rationality_flag",
    "shifted_difference",
    "symmetric_power",
    "tensor",
    "theorem_sum",
    "weighted_compositions",
]
