"""Group determinants and their factorizations over subgroups.

``determinant_oracle`` expands det(x_{gh^-1}) by brute force and never touches
characters; everything else in this module is built from the character
machinery and checked against it whenever the group is small enough.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field as dc_field
from functools import lru_cache, reduce
from operator import mul
from typing import Callable, Mapping, Sequence

from .characters import (
    Character,
    RestrictedCharacter,
    annihilator,
    dual_coset_reps,
    dual_group,
    restrict_characters,
)
from .cyclotomic import CycNumber
from .errors import (
    IncompleteAssignmentError,
    InternalConsistencyError,
    OracleBoundError,
    SingularElementError,
    TheoremViolationError,
)
from .groupalg import AlgElement, fundamental_F, generic_element, product, support
from .groups import Element, Group, Subgroup, _check_subgroup, whole_group
from .poly import Poly, poly_ring

DEFAULT_ORACLE_BOUND = 8

ORACLE_VERIFIED = "oracle-verified"
UNVERIFIED = "unverified-by-oracle"
IDENTITY_CHECKED = "identity-checked"


@dataclass(frozen=True)
class GroupMatrix:
    """The |G| x |G| matrix whose (g, h) entry is the variable x_{g h^-1}."""

    group: Group
    entries: tuple[tuple[Element, ...], ...]

    def __str__(self):
        ring = poly_ring(self.group)
        rows = (
            " ".join(ring.var_name(self.group.index(g)) for g in row) for row in self.entries
        )
        return "\n".join(rows)


def group_matrix(G: Group) -> GroupMatrix:
    return GroupMatrix(
        G, tuple(tuple(G.mul(g, G.inv(h)) for h in G.elements) for g in G.elements)
    )


def _parity(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    swaps = 0
    for i in range(len(perm)):
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length:
            swaps += length - 1
    return swaps & 1


def determinant_oracle(M: GroupMatrix, bound: int = DEFAULT_ORACLE_BOUND) -> Poly:
    """Leibniz expansion of det(M): a sum over all |G|! permutations."""
    G = M.group
    n = G.order
    if n > bound:
        raise OracleBoundError(f"|G| = {n} exceeds the oracle bound {bound}")
    return _leibniz(M)


@lru_cache(maxsize=32)
def _leibniz(M: GroupMatrix) -> Poly:
    G = M.group
    n = G.order
    idx = [[G.index(x) for x in row] for row in M.entries]
    counts: Counter = Counter()
    for perm in itertools.permutations(range(n)):
        mono = [0] * n
        for i, j in enumerate(perm):
            mono[idx[i][j]] += 1
        counts[tuple(mono)] += -1 if _parity(perm) else 1
    ring = poly_ring(G)
    return Poly.from_terms(ring, ((m, c) for m, c in counts.items() if c))


def group_determinant(G: Group, oracle_bound: int = DEFAULT_ORACLE_BOUND) -> Poly:
    """Theta(G): by Leibniz expansion within the bound, else as the Dedekind product."""
    if G.order <= oracle_bound:
        return determinant_oracle(group_matrix(G), oracle_bound)
    return _product_polys(dedekind_linear_forms(G), G)


def dedekind_linear_forms(G: Group) -> list[Poly]:
    return [fundamental_F(generic_element(G, chi)) for chi in dual_group(G)]


def _product_polys(polys: Sequence[Poly], G: Group) -> Poly:
    return reduce(mul, polys, poly_ring(G).one())


@dataclass
class Factorization:
    """Theta(G) as a product of scalar polynomials, one per character of H."""

    group: Group
    subgroup: Subgroup
    coefficients: dict[Element, Poly]
    factors: list[Poly]
    product: Poly
    characters: list[Character] = dc_field(default_factory=list)
    status: str = UNVERIFIED


@dataclass
class ExtendedFactorization:
    """Theta(G) e written as a product of elements of the group algebra of H."""

    group: Group
    subgroup: Subgroup
    coefficients: dict[Element, Poly]
    characters: list[Character]
    restrictions: list[RestrictedCharacter]
    factors: list[AlgElement]
    element: AlgElement
    status: str = UNVERIFIED

    @property
    def determinant(self) -> Poly:
        return self.element.coeff(self.group.identity)


def dedekind_factorization(G: Group, oracle_bound: int = DEFAULT_ORACLE_BOUND) -> Factorization:
    """Theta(G) as the product of the |G| linear forms sum_g chi(g) x_g."""
    ring = poly_ring(G)
    chars = list(dual_group(G))
    factors = dedekind_linear_forms(G)
    prod = _product_polys(factors, G)
    status = UNVERIFIED
    if G.order <= oracle_bound:
        if prod != determinant_oracle(group_matrix(G), oracle_bound):
            raise TheoremViolationError(f"Dedekind product differs from the determinant of {G}")
        status = ORACLE_VERIFIED
    return Factorization(
        group=G,
        subgroup=whole_group(G),
        coefficients={g: ring.var(g) for g in G.elements},
        factors=factors,
        product=prod,
        characters=chars,
        status=status,
    )


def subgroup_coefficients(G: Group, H: Subgroup) -> dict[Element, Poly]:
    """The polynomials A_h with  prod_{chi kills H} sum_g chi(g) x_g g = sum_h A_h h."""
    _check_subgroup(G, H)
    prod = product((generic_element(G, chi) for chi in annihilator(G, H)), G)
    stray = support(prod) - set(H.members)
    if stray:
        raise InternalConsistencyError(
            f"annihilator product escapes the subgroup at {sorted(stray)}"
        )
    return {h: prod.coeff(h) for h in H.members}


def extended_factorization(
    G: Group,
    H: Subgroup,
    oracle_bound: int = DEFAULT_ORACLE_BOUND,
    choose: Callable[[Sequence[Character]], Character] | None = None,
) -> ExtendedFactorization:
    """Multiply sum_h chi(h) A_h h over all characters chi of H.

    The characters of H are the restrictions of dual coset representatives of
    the annihilator.  The product must be Theta(G) times the identity.
    """
    coeffs = subgroup_coefficients(G, H)
    reps = dual_coset_reps(G, H, choose)
    restricted = restrict_characters(reps, H)
    factors = [
        AlgElement(G, {h: a.scale(psi(h)) for h, a in coeffs.items()}) for psi in restricted
    ]
    element = product(factors, G)
    if support(element) != {G.identity}:
        raise TheoremViolationError(
            f"extended product over {H!r} has support {sorted(support(element))}, expected the identity"
        )
    status = UNVERIFIED
    if G.order <= oracle_bound:
        if element.coeff(G.identity) != determinant_oracle(group_matrix(G), oracle_bound):
            raise TheoremViolationError(f"extended product over {H!r} is not the group determinant")
        status = ORACLE_VERIFIED
    return ExtendedFactorization(
        group=G,
        subgroup=H,
        coefficients=coeffs,
        characters=reps,
        restrictions=restricted,
        factors=factors,
        element=element,
        status=status,
    )


def generalized_factorization(
    G: Group,
    H: Subgroup,
    oracle_bound: int = DEFAULT_ORACLE_BOUND,
    choose: Callable[[Sequence[Character]], Character] | None = None,
) -> Factorization:
    """Theta(G) = prod over characters psi of H of sum_h psi(h) A_h."""
    ext = extended_factorization(G, H, oracle_bound, choose)
    factors = [fundamental_F(f) for f in ext.factors]
    prod = _product_polys(factors, G)
    if prod != ext.determinant:
        raise TheoremViolationError("collapsed factors do not multiply to the extended product")
    return Factorization(
        group=G,
        subgroup=H,
        coefficients=ext.coefficients,
        factors=factors,
        product=prod,
        characters=ext.characters,
        status=ext.status,
    )


def _scalars(G: Group, assignment: Mapping) -> dict[Element, CycNumber]:
    fld = poly_ring(G).field
    out = {}
    for g in G.elements:
        if g in assignment:
            v = assignment[g]
        elif G.rank == 1 and g[0] in assignment:
            v = assignment[g[0]]
        else:
            raise IncompleteAssignmentError(f"no value assigned to x[{G.format_element(g)}]")
        out[g] = fld(v)
    return out


def evaluate_determinant(G: Group, assignment: Mapping) -> CycNumber:
    """Theta(G) at a point, as the product of the evaluated Dedekind linear forms.

    Raises ``SingularElementError`` naming the first vanishing character.
    """
    x = _scalars(G, assignment)
    fld = poly_ring(G).field
    theta = fld.one
    for chi in dual_group(G):
        form = fld.zero
        for g, v in x.items():
            form = form + chi(g) * v
        if not form:
            raise SingularElementError(
                f"the group determinant vanishes: the linear form of {chi!r} is zero",
                character=chi.index,
            )
        theta = theta * form
    return theta


def ga_inverse(G: Group, assignment: Mapping) -> dict[Element, CycNumber]:
    """Inverse of sum_g x_g g at a point, from the product of the nontrivial twists."""
    x = _scalars(G, assignment)
    theta = evaluate_determinant(G, x)
    alpha = AlgElement(G, {g: poly_ring(G).const(v) for g, v in x.items()})
    twisted = []
    for chi in dual_group(G):
        if chi.is_trivial():
            continue
        twisted.append(AlgElement(G, {g: poly_ring(G).const(chi(g) * v) for g, v in x.items()}))
    inv = product(twisted, G).scale(1 / theta)
    if alpha * inv != AlgElement.one(G):
        raise TheoremViolationError("the computed inverse does not multiply back to the identity")
    fld = poly_ring(G).field
    return {g: _constant(inv.coeff(g), fld) for g in G.elements}


def _constant(p: Poly, fld) -> CycNumber:
    if not p.terms:
        return fld.zero
    ((mono, c),) = p.terms.items()
    if any(mono):
        raise InternalConsistencyError("scalar computation produced a non-constant coefficient")
    return c
