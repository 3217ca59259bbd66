"""Irreducible polynomials in numerical semigroup algebras F_q[S].

Exact polynomial arithmetic over prime fields, numerical semigroup
queries, algebra-level irreducibility with witnesses, closed-form
counting with independent brute-force verification, and a CLI.
"""

from .counting import (
    CountRow,
    CyclotomicRecord,
    algebra_count,
    b_counts,
    bound_density,
    count_aq,
    count_rq,
    count_s,
    cyclotomic_experiment,
    density,
    friendly_count_row,
    friendly_density,
    mobius,
    mult_order,
    partition_sum,
)
from .ffpoly import (
    ZERO_DEGREE,
    FieldSpec,
    FqFactorization,
    Polynomial,
    factor_fq,
    format_poly,
    is_irreducible_fq,
    parse_poly,
    poly_divrem,
    poly_gcd,
    q_transform,
    reciprocal,
)
from .numsgp import NumericalSemigroup, from_generators
from .sgalg import (
    CLASSIC,
    WILD,
    AlgebraContext,
    AlgebraVerdict,
    ClassCounts,
    FactorShape,
    FriendlyClass,
    classify_friendly,
    count_classes,
    enumerate_degree,
    factorization_shape,
    find_subproduct,
    friendly_context,
    is_irreducible_in_algebra,
    is_member,
    iter_irreducible,
    member_count,
    tame,
)

__all__ = [
    "AlgebraContext",
    "AlgebraVerdict",
    "CLASSIC",
    "ClassCounts",
    "CountRow",
    "CyclotomicRecord",
    "FactorShape",
    "FieldSpec",
    "FqFactorization",
    "FriendlyClass",
    "NumericalSemigroup",
    "Polynomial",
    "WILD",
    "ZERO_DEGREE",
    "algebra_count",
    "b_counts",
    "bound_density",
    "classify_friendly",
    "count_aq",
    "count_classes",
    "count_rq",
    "count_s",
    "cyclotomic_experiment",
    "density",
    "enumerate_degree",
    "factor_fq",
    "factorization_shape",
    "find_subproduct",
    "format_poly",
    "friendly_context",
    "friendly_count_row",
    "friendly_density",
    "from_generators",
    "is_irreducible_fq",
    "is_irreducible_in_algebra",
    "is_member",
    "iter_irreducible",
    "member_count",
    "mobius",
    "mult_order",
    "parse_poly",
    "partition_sum",
    "poly_divrem",
    "poly_gcd",
    "q_transform",
    "reciprocal",
    "tame",
]

__version__ = "0.1.0"
