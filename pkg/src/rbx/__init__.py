"""Exact verification workbench for Rota-Baxter operators of any weight.

Everything computes over `fractions.Fraction`; there is no floating point and
no tolerance anywhere. Carriers that truncate (Laurent tails, polynomial
degree caps) raise `ConfigError` instead of silently dropping terms.
"""

from .algebra import (
    RBAlgebra,
    SamplePlan,
    b_operator,
    check_double_assoc_and_hom,
    check_linearity,
    check_prelie_axiom,
    check_rb_law,
    check_weight_rescale,
    double_product,
    half_shuffles,
    prelie_left,
    prelie_right,
    tilde_operator,
)
from .cli import SuiteConfig, main, parse_config, run_suite
from .combinat import (
    CycleDecomposition,
    MonoidAlphabet,
    Permutation,
    SetPartition,
    Word,
    bilinear,
    canonical_cycles,
    is_shuffle_of,
    permutations,
    quasi_shuffle,
    quasi_shuffle_lower,
    quasi_shuffle_merge,
    quasi_shuffle_upper,
    set_partitions,
    shuffle,
    shuffle_lower,
    shuffle_sum,
    shuffle_upper,
    word_sum,
)
from .errors import ConfigError
from .identities import (
    BSOperands,
    FixedPointSolution,
    MagnusExpansion,
    atkinson_solutions,
    bch_series,
    bogoliubov_decompose,
    check_atkinson,
    check_bogoliubov,
    check_bohnenblust_spitzer,
    check_flows_bch,
    check_flows_product_law,
    check_nc_spitzer,
    cycle_chain_product,
    flows_product,
    prelie_magnus,
    solve_fixed_point,
    spitzer_check_commutative,
)
from .models import (
    LaurentElement,
    PolyFunction,
    RatMatrix,
    SeqElement,
    check_vector_field_prelie,
    commutative_standard_algebra,
    elementary_symmetric_check,
    finite_difference,
    integration_algebra,
    laurent_algebra,
    laurent_monomial,
    laurent_pole_projection,
    matrix_algebra,
    nested_sum_encoding,
    nested_sum_encoding_sum,
    noncommutative_standard_algebra,
    polynomial_derivative,
    riemann_integral,
    standard_generator,
    standard_sum_operator,
    summation_algebra,
    summation_operator,
    triangular_projection,
)
from .polynomials import CPoly, NCPoly
from .report import CheckResult, Report, emit_report
from .scalars import Rational, bernoulli, parse_rational
from .series import LambdaSeries, series_exp, series_inverse, series_log
from .yangbaxter import (
    LieCarrier,
    TensorR,
    aybe_check,
    check_dendriform,
    check_modified_ybe,
    check_operator_ybe,
    kron,
    rb_from_tensor,
    tensor_rb_algebra,
)

__version__ = "0.1.0"

__all__ = [
    "BSOperands",
    "CPoly",
    "CheckResult",
    "ConfigError",
    "CycleDecomposition",
    "FixedPointSolution",
    "LambdaSeries",
    "LaurentElement",
    "LieCarrier",
    "MagnusExpansion",
    "MonoidAlphabet",
    "NCPoly",
    "Permutation",
    "PolyFunction",
    "RBAlgebra",
    "RatMatrix",
    "Rational",
    "Report",
    "SamplePlan",
    "SeqElement",
    "SetPartition",
    "SuiteConfig",
    "TensorR",
    "Word",
    "atkinson_solutions",
    "aybe_check",
    "b_operator",
    "bch_series",
    "bernoulli",
    "bilinear",
    "bogoliubov_decompose",
    "canonical_cycles",
    "check_atkinson",
    "check_bogoliubov",
    "check_bohnenblust_spitzer",
    "check_dendriform",
    "check_double_assoc_and_hom",
    "check_flows_bch",
    "check_flows_product_law",
    "check_linearity",
    "check_modified_ybe",
    "check_nc_spitzer",
    "check_operator_ybe",
    "check_prelie_axiom",
    "check_rb_law",
    "check_vector_field_prelie",
    "check_weight_rescale",
    "commutative_standard_algebra",
    "cycle_chain_product",
    "double_product",
    "elementary_symmetric_check",
    "emit_report",
    "finite_difference",
    "flows_product",
    "half_shuffles",
    "integration_algebra",
    "is_shuffle_of",
    "kron",
    "laurent_algebra",
    "laurent_monomial",
    "laurent_pole_projection",
    "main",
    "matrix_algebra",
    "nested_sum_encoding",
    "nested_sum_encoding_sum",
    "noncommutative_standard_algebra",
    "parse_config",
    "parse_rational",
    "permutations",
    "polynomial_derivative",
    "prelie_left",
    "prelie_magnus",
    "prelie_right",
    "quasi_shuffle",
    "quasi_shuffle_lower",
    "quasi_shuffle_merge",
    "quasi_shuffle_upper",
    "rb_from_tensor",
    "riemann_integral",
    "run_suite",
    "series_exp",
    "series_inverse",
    "series_log",
    "set_partitions",
    "shuffle",
    "shuffle_lower",
    "shuffle_sum",
    "shuffle_upper",
    "solve_fixed_point",
    "spitzer_check_commutative",
    "standard_generator",
    "standard_sum_operator",
    "summation_algebra",
    "summation_operator",
    "tensor_rb_algebra",
    "tilde_operator",
    "triangular_projection",
    "word_sum",
]
