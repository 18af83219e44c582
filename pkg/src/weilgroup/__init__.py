"""Groups of rational points on abelian varieties of dimension <= 3.

Classifies the possible l-primary groups of rational points across an
isogeny class, given its characteristic polynomial of Frobenius, by exact
Newton/Hodge polygon dominance and Horn/Smith-invariant feasibility, with
independent brute-force oracles (tableau counting and exhaustive matrix
sweeps) validating every step.
"""

from .classify import (
    Classification,
    classify_all,
    groups_case1,
    groups_case2,
    groups_case3,
    groups_cyclic_index,
    groups_p_square,
    groups_scalar,
    groups_separable,
)
from .horn import (
    HornTriple,
    complement_triple,
    enumerate_T,
    enumerate_T_st,
    enumerate_U,
    eval_inequality,
    lambda_of,
)
from .oracle import (
    lr_coefficient,
    matrix_cokernel_oracle,
    operator_group_oracle,
    smith_invariants,
)
from .polygon import (
    LatticePolygon,
    ValuationProfile,
    hodge_polygon,
    newton_polygon,
    np_dominates_hp,
    transform_one_minus_t,
)
from .reduce import reduce_system
from .smith import enumerate_cokernels, feasible_triple, inequality_system
from .verify import verify_paper_lists
from .weil import (
    FactoredShape,
    WeilPolynomial,
    factor_weil,
    group_order,
    parse_and_validate,
    root_valuations,
    shape_of,
)

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "FactoredShape",
    "HornTriple",
    "LatticePolygon",
    "ValuationProfile",
    "WeilPolynomial",
    "classify_all",
    "complement_triple",
    "enumerate_T",
    "enumerate_T_st",
    "enumerate_U",
    "enumerate_cokernels",
    "eval_inequality",
    "factor_weil",
    "feasible_triple",
    "group_order",
    "groups_case1",
    "groups_case2",
    "groups_case3",
    "groups_cyclic_index",
    "groups_p_square",
    "groups_scalar",
    "groups_separable",
    "hodge_polygon",
    "inequality_system",
    "lambda_of",
    "lr_coefficient",
    "matrix_cokernel_oracle",
    "newton_polygon",
    "np_dominates_hp",
    "operator_group_oracle",
    "parse_and_validate",
    "reduce_system",
    "root_valuations",
    "shape_of",
    "smith_invariants",
    "transform_one_minus_t",
    "verify_paper_lists",
]
