"""Hereditary orders, weighted projective lines and tilting objects, computed exactly."""

from .dvr import (
    BlockOrder,
    ColumnModule,
    LatticeColumn,
    TruncatedAlgebra,
    comparison_table,
    hom_ext_simple_pair,
    oracle_hom_ext,
    radical_power_check,
)
from .exact_linalg import (
    PrimeField,
    determinant,
    invariant_factors,
    nullspace_mod_p,
    rank_mod_p,
    smith_normal_form,
    solve_integer_linear,
)
from .grading import GradingGroup, GroupElement, build_grading_group, canonical_form, phi
from .k0 import (
    CyclicQuiver,
    FiniteLengthInfiniteSimples,
    HereditaryAlgebra,
    K0Result,
    SheafOrder,
    classify,
    k0_rank,
    verify_tilting,
)
from .p1 import (
    HomExtTable,
    SheafOrderSpec,
    TiltingSummand,
    canonical_cartan,
    cartan_matrix,
    coxeter_polynomial,
    hom_ext_table,
    tilting_object,
)
from .wpl import (
    GradedRingSpec,
    hilbert_order_side,
    hilbert_wpl,
    lambda_from_points,
    normalize_points,
    oracle_hilbert,
    verify_hilbert_match,
)

__all__ = [name for name in dir() if not name.startswith("_")]
