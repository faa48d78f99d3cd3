"""Lower bounds for the minimum distance of two-point algebraic-geometry codes."""

from .cosets import (coset_bound_abzprime, coset_bound_fixed_column,
                     coset_bound_cbdiv, coset_bound_mts)
from .curves import (CurveError, CurveSpec, load_curve, make_suzuki_curve,
                     save_curve, suzuki_d_closed_form, validate_curve)
from .membership import (DivisorClass, in_delta_p, in_delta_q, in_gamma_p,
                         in_gamma_q, is_effective_class)
from .oracle import OracleConfig, brute_force_coset_bound, semigroup_from_generators
from .reports import compare_bounds, cross_tab, optimal_by_degree
from .tables import (BoundKind, BoundTable, bpt_bound, build_coset_tables,
                     code_bound, distance_table, goppa_bound)

__all__ = [
    "BoundKind", "BoundTable", "CurveError", "CurveSpec", "DivisorClass",
    "OracleConfig", "bpt_bound", "brute_force_coset_bound",
    "build_coset_tables", "code_bound", "compare_bounds",
    "coset_bound_abzprime", "coset_bound_fixed_column", "coset_bound_cbdiv",
    "coset_bound_mts", "cross_tab", "distance_table", "goppa_bound",
    "in_delta_p", "in_delta_q", "in_gamma_p", "in_gamma_q",
    "is_effective_class", "load_curve", "make_suzuki_curve",
    "optimal_by_degree", "save_curve", "semigroup_from_generators",
    "suzuki_d_closed_form", "validate_curve",
]
