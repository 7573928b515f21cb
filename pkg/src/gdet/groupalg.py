"""The group algebra of G over the polynomial ring Q(zeta_N)[x_g].

An ``AlgElement`` is a finite formal sum  sum_g A_g * g  stored as a dict from
group elements to nonzero polynomials.
"""

from __future__ import annotations

from functools import reduce
from typing import Iterable

from .characters import Character
from .errors import MismatchError
from .groups import Element, Group
from .poly import Poly, poly_ring


class AlgElement:
    __slots__ = ("group", "ring", "coeffs")

    def __init__(self, group: Group, coeffs: dict[Element, Poly] | None = None):
        self.group = group
        self.ring = poly_ring(group)
        self.coeffs = {g: p for g, p in (coeffs or {}).items() if p}
        for g in self.coeffs:
            group.check(g)

    @classmethod
    def scalar(cls, group: Group, c, g: Element | None = None) -> AlgElement:
        """``c * g`` with ``g`` defaulting to the identity."""
        g = group.identity if g is None else g
        return cls(group, {g: poly_ring(group).const(c)})

    @classmethod
    def one(cls, group: Group) -> AlgElement:
        return cls.scalar(group, 1)

    def _check(self, other):
        if not isinstance(other, AlgElement):
            return None
        if other.group != self.group:
            raise MismatchError(f"algebra elements of {self.group} and {other.group}")
        return other

    def coeff(self, g: Element) -> Poly:
        return self.coeffs.get(g, self.ring.zero())

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        out = dict(self.coeffs)
        for g, p in other.coeffs.items():
            out[g] = out[g] + p if g in out else p
        return AlgElement(self.group, out)

    def __neg__(self):
        return AlgElement(self.group, {g: -p for g, p in self.coeffs.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return ga_multiply(self, other)

    def scale(self, c) -> AlgElement:
        return AlgElement(self.group, {g: p * c for g, p in self.coeffs.items()})

    def __eq__(self, other):
        return (
            isinstance(other, AlgElement)
            and self.group == other.group
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __str__(self):
        if not self.coeffs:
            return "0"
        fmt = self.group.format_element
        return " + ".join(f"({p}) * {fmt(g)}" for g, p in self.sorted_items())

    def to_text(self) -> str:
        """Canonical text: ``poly * g`` summands in element order."""
        if not self.coeffs:
            return "0"
        fmt = self.group.format_element
        return " ; ".join(f"{p.to_text()} * {fmt(g)}" for g, p in self.sorted_items())

    def __repr__(self):
        return f"AlgElement({self})"

    def sorted_items(self) -> list[tuple[Element, Poly]]:
        return sorted(self.coeffs.items(), key=lambda kv: self.group.index(kv[0]))


def generic_element(G: Group, chi: Character | None = None) -> AlgElement:
    """sum_g chi(g) x_g g, or sum_g x_g g without a character."""
    ring = poly_ring(G)
    if chi is None:
        return AlgElement(G, {g: ring.var(g) for g in G.elements})
    if chi.group != G:
        raise MismatchError(f"{chi!r} is not a character of {G}")
    return AlgElement(G, {g: ring.var(g).scale(chi(g)) for g in G.elements})


def ga_multiply(a: AlgElement, b: AlgElement) -> AlgElement:
    """Convolution: the coefficient of k is the sum of A_g B_h over gh = k."""
    if a.group != b.group:
        raise MismatchError(f"algebra elements of {a.group} and {b.group}")
    G = a.group
    out: dict[Element, Poly] = {}
    for g, p in a.coeffs.items():
        for h, q in b.coeffs.items():
            k = G.mul(g, h)
            pq = p * q
            out[k] = out[k] + pq if k in out else pq
    return AlgElement(G, out)


def product(elements: Iterable[AlgElement], group: Group) -> AlgElement:
    """Left fold of ``ga_multiply`` in the given order; the empty product is 1*e."""
    return reduce(ga_multiply, elements, AlgElement.one(group))


def apply_T(chi: Character, a: AlgElement) -> AlgElement:
    """Twist each coefficient: A_g g -> chi(g) A_g g."""
    if chi.group != a.group:
        raise MismatchError(f"{chi!r} does not act on the algebra of {a.group}")
    return AlgElement(a.group, {g: p.scale(chi(g)) for g, p in a.coeffs.items()})


def support(a: AlgElement) -> set[Element]:
    return set(a.coeffs)


def fundamental_F(a: AlgElement) -> Poly:
    """Collapse every group element to 1: sum_g A_g."""
    total = a.ring.zero()
    for _, p in a.sorted_items():
        total = total + p
    return total
