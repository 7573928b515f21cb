"""Exact factorizations of group determinants of finite abelian groups."""

from .characters import (
    Character,
    DualSet,
    RestrictedCharacter,
    annihilator,
    character_eval,
    dual_coset_reps,
    dual_group,
    restrict_characters,
    separating_character,
)
from .cyclotomic import CycNumber, cyc_arith, cyclotomic_polynomial, field, root_of_unity
from .detfact import (
    ExtendedFactorization,
    Factorization,
    GroupMatrix,
    dedekind_factorization,
    determinant_oracle,
    evaluate_determinant,
    extended_factorization,
    ga_inverse,
    generalized_factorization,
    group_determinant,
    group_matrix,
    subgroup_coefficients,
)
from .groupalg import AlgElement, apply_T, fundamental_F, ga_multiply, generic_element, support
from .groups import (
    Group,
    QuotientGroup,
    Subgroup,
    all_subgroups,
    group_op,
    make_group,
    quotient_group,
    subgroup_closure,
)
from .poly import Poly, PolyRing, degree_report, parse_poly, poly_arith, poly_eval, poly_ring

__version__ = "0.1.0"
