"""Property checks run by ``gdet verify`` for one group and all its subgroups."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .characters import (
    annihilator,
    dual_coset_reps,
    dual_group,
    restrict_characters,
    separating_character,
)
from .detfact import (
    DEFAULT_ORACLE_BOUND,
    determinant_oracle,
    extended_factorization,
    ga_inverse,
    generalized_factorization,
    group_matrix,
    subgroup_coefficients,
)
from .errors import GdetError, SingularElementError
from .groupalg import AlgElement, apply_T, support
from .groups import Group, all_subgroups
from .poly import Poly, poly_ring


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def random_rational(rng: random.Random, span: int = 5, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def random_poly(G: Group, rng: random.Random, nterms: int = 2, max_deg: int = 2) -> Poly:
    ring = poly_ring(G)
    fld = ring.field
    terms = []
    for _ in range(nterms):
        mono = [0] * ring.nvars
        for _ in range(rng.randint(0, max_deg)):
            mono[rng.randrange(ring.nvars)] += 1
        coeff = fld.from_coords([random_rational(rng) for _ in range(fld.degree)])
        terms.append((tuple(mono), coeff))
    return Poly.from_terms(ring, terms)


def random_element(G: Group, rng: random.Random, on=None, density: float = 0.6) -> AlgElement:
    """A random algebra element supported on ``on`` (default: all of G)."""
    elems = G.elements if on is None else tuple(on)
    coeffs = {g: random_poly(G, rng) for g in elems if rng.random() < density}
    return AlgElement(G, coeffs)


def random_assignment(G: Group, rng: random.Random) -> dict:
    return {g: random_rational(rng) for g in G.elements}


def _check(name, fn) -> CheckResult:
    try:
        detail = fn()
    except (AssertionError, GdetError) as exc:
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")
    return CheckResult(name, True, detail or "")


def run_suite(
    G: Group,
    seed: int = 0,
    oracle_bound: int = DEFAULT_ORACLE_BOUND,
    inverse_samples: int = 100,
    random_trials: int = 5,
) -> list[CheckResult]:
    rng = random.Random(seed)
    subs = all_subgroups(G)
    within = G.order <= oracle_bound
    theta = determinant_oracle(group_matrix(G), oracle_bound) if within else None
    e = G.identity
    results = []

    def oracle_equivalence():
        if not within:
            return f"skipped: |G| = {G.order} exceeds oracle bound {oracle_bound}"
        for H in subs:
            f = generalized_factorization(G, H, oracle_bound)
            assert f.product == theta, f"generalized product differs for {H!r}"
        return f"{len(subs)} subgroups"

    def extended_identity():
        for H in subs:
            ext = extended_factorization(G, H, oracle_bound)
            assert support(ext.element) == {e}, f"support {support(ext.element)} for {H!r}"
            if within:
                assert ext.determinant == theta, f"coefficient differs for {H!r}"
        return f"{len(subs)} subgroups"

    def degree_law():
        for H in subs:
            f = generalized_factorization(G, H, oracle_bound)
            assert len(f.factors) == H.order, f"{len(f.factors)} factors for {H!r}"
            assert H.order * H.index == G.order
            for h, a in f.coefficients.items():
                assert a.is_homogeneous() and a.degree() == H.index, f"A_{h} for {H!r}: {a}"
            for p in f.factors:
                assert p.degree() == H.index, f"factor degree {p.degree()} for {H!r}"
        return ""

    def special_cases():
        whole, trivial = subs[-1], subs[0]
        ring = poly_ring(G)
        coeffs = subgroup_coefficients(G, whole)
        assert all(coeffs[g] == ring.var(g) for g in G.elements), "H = G does not give A_h = x_h"
        coeffs = subgroup_coefficients(G, trivial)
        assert list(coeffs) == [e]
        if within:
            assert coeffs[e] == theta, "H = {e} does not give A_e = Theta(G)"
        return ""

    def character_machinery():
        for H in subs:
            ann = annihilator(G, H)
            assert len(ann) == H.index, f"|annihilator| = {len(ann)} for {H!r}"
            reps = dual_coset_reps(G, H)
            assert len(reps) == H.order
            restricted = restrict_characters(reps, H)
            for psi in restricted:
                for a in H.members:
                    for b in H.members:
                        assert psi(G.mul(a, b)) == psi(a) * psi(b)
            for g in G.elements:
                if g not in H:
                    chi = separating_character(G, H, g)
                    assert chi in ann and chi(g) != 1
        return ""

    def operator_laws():
        chars = list(dual_group(G))
        for _ in range(random_trials):
            chi, chi2 = rng.choice(chars), rng.choice(chars)
            a, b = random_element(G, rng), random_element(G, rng)
            assert apply_T(chi, apply_T(chi2, a)) == apply_T(chi * chi2, a)
            assert apply_T(chi, a * b) == apply_T(chi, a) * apply_T(chi, b)
        return f"{random_trials} random trials"

    def fixed_points():
        for H in subs:
            ann = list(annihilator(G, H))
            alpha = random_element(G, rng, on=H.members, density=1.0)
            assert all(apply_T(chi, alpha) == alpha for chi in ann)
            for g in G.elements:
                if g in H:
                    continue
                beta = alpha + AlgElement(G, {g: random_poly(G, rng, nterms=1) or poly_ring(G).one()})
                assert any(apply_T(chi, beta) != beta for chi in ann), f"{g} not detected for {H!r}"
        return ""

    def representative_independence():
        for H in subs:
            canonical = extended_factorization(G, H, oracle_bound)
            shuffled = extended_factorization(G, H, oracle_bound, choose=rng.choice)
            assert shuffled.element == canonical.element
        return ""

    def inverse_round_trip():
        done = singular = 0
        for _ in range(inverse_samples):
            x = random_assignment(G, rng)
            try:
                inv = ga_inverse(G, x)
            except SingularElementError:
                singular += 1
                continue
            alpha = AlgElement(G, {g: poly_ring(G).const(v) for g, v in x.items()})
            beta = AlgElement(G, {g: poly_ring(G).const(v) for g, v in inv.items()})
            assert alpha * beta == AlgElement.one(G)
            done += 1
        return f"{done} inverted, {singular} singular draws skipped"

    for name, fn in [
        ("oracle-equivalence", oracle_equivalence),
        ("extended-identity", extended_identity),
        ("degree-law", degree_law),
        ("special-cases", special_cases),
        ("character-machinery", character_machinery),
        ("operator-laws", operator_laws),
        ("fixed-points", fixed_points),
        ("representative-independence", representative_independence),
        ("inverse-round-trip", inverse_round_trip),
    ]:
        results.append(_check(name, fn))
    return results
