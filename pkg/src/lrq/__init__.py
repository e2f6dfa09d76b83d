"""Generalized Littlewood-Richardson polynomials for the Macdonald inner product at q = t^k."""
from .ktableaux import KTableau, MonomialEntry, enumerate_tableaux, layers, reading_word, statistic
from .laurent import LaurentPoly, is_symmetric_unimodal, quantum_binomial
from .lr import CoeffKey, CoeffRecord, coeff_normalized, coeff_oracle, coeff_tableau, cross_validate, sweep_symmetry_unimodality
from .partitions import SkewShape, classical_lr, partition, partitions_of
from .symfunc import SymFunc, hermitian_inner, macdonald_inner, schur_lower, to_basis

__all__ = [
    "CoeffKey",
    "CoeffRecord",
    "KTableau",
    "LaurentPoly",
    "MonomialEntry",
    "SkewShape",
    "SymFunc",
    "classical_lr",
    "coeff_normalized",
    "coeff_oracle",
    "coeff_tableau",
    "cross_validate",
    "enumerate_tableaux",
    "hermitian_inner",
    "is_symmetric_unimodal",
    "layers",
    "macdonald_inner",
    "partition",
    "partitions_of",
    "quantum_binomial",
    "reading_word",
    "schur_lower",
    "statistic",
    "sweep_symmetry_unimodality",
    "to_basis",
]
