"""Finite abelian groups given as explicit products Z/m1 x ... x Z/mr.

Elements are plain tuples of residues.  The canonical element order is the
lexicographic order on those tuples, so the identity always comes first.
"""

from __future__ import annotations

import itertools
import math
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvalidElementError, InvalidGroupError, MismatchError

Element = tuple


class Group:
    """The group Z/m1 x ... x Z/mr.

    >>> G = Group([4, 2])
    >>> G.order, G.exponent
    (8, 4)
    >>> G.elements[:3]
    ((0, 0), (0, 1), (1, 0))
    """

    def __init__(self, moduli: Sequence[int]):
        moduli = tuple(moduli)
        if not moduli:
            raise InvalidGroupError("a group needs at least one cyclic factor")
        for m in moduli:
            if not isinstance(m, int) or isinstance(m, bool) or m < 1:
                raise InvalidGroupError(f"invalid modulus {m!r}")
        self.moduli = moduli
        self.order = math.prod(moduli)
        self.exponent = math.lcm(*moduli)
        self.elements = tuple(itertools.product(*(range(m) for m in moduli)))
        self._index = {g: i for i, g in enumerate(self.elements)}

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def identity(self) -> Element:
        return self.elements[0]

    def __repr__(self):
        return f"Group({list(self.moduli)})"

    def __str__(self):
        return "x".join(f"Z{m}" for m in self.moduli)

    def __eq__(self, other):
        return isinstance(other, Group) and self.moduli == other.moduli

    def __hash__(self):
        return hash(("Group", self.moduli))

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return g in self._index

    def index(self, g: Element) -> int:
        """Position of ``g`` in the canonical element order."""
        try:
            return self._index[g]
        except (KeyError, TypeError):
            raise InvalidElementError(f"{g!r} is not an element of {self}") from None

    def check(self, g) -> Element:
        """Return ``g`` as an element tuple, raising if it is not one."""
        if isinstance(g, int) and self.rank == 1:
            g = (g,)
        if not isinstance(g, tuple) or len(g) != self.rank:
            raise InvalidElementError(f"{g!r} has the wrong shape for {self}")
        if g not in self._index:
            raise InvalidElementError(f"{g!r} is not reduced modulo {self.moduli}")
        return g

    def element(self, coords) -> Element:
        """Build an element from arbitrary integers, reducing each residue."""
        if isinstance(coords, int):
            coords = (coords,)
        coords = tuple(coords)
        if len(coords) != self.rank:
            raise InvalidElementError(f"{coords!r} has the wrong shape for {self}")
        return tuple(a % m for a, m in zip(coords, self.moduli))

    def mul(self, a: Element, b: Element) -> Element:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def inv(self, a: Element) -> Element:
        return tuple(-x % m for x, m in zip(a, self.moduli))

    def element_order(self, a: Element) -> int:
        return math.lcm(*(m // math.gcd(m, x) for x, m in zip(a, self.moduli)))

    def format_element(self, g: Element) -> str:
        if self.rank == 1:
            return str(g[0])
        return "(" + ",".join(map(str, g)) + ")"

    @cached_property
    def mul_table(self) -> tuple[tuple[int, ...], ...]:
        """``mul_table[i][j]`` is the index of ``elements[i] * elements[j]``."""
        return tuple(
            tuple(self._index[self.mul(a, b)] for b in self.elements) for a in self.elements
        )


def make_group(moduli: Sequence[int]) -> Group:
    return Group(moduli)


def group_op(G: Group, a, b=None, mode: str = "multiply") -> Element:
    """Dispatch ``multiply``, ``invert`` or ``identity`` on ``G``."""
    if mode == "identity":
        return G.identity
    a = G.check(a)
    if mode == "invert":
        return G.inv(a)
    if mode == "multiply":
        return G.mul(a, G.check(b))
    raise ValueError(f"unknown mode {mode!r}")


class Subgroup:
    """A subgroup of ``parent``, stored by its full member list."""

    def __init__(self, parent: Group, members: Iterable[Element], generators: Iterable[Element] = ()):
        self.parent = parent
        mset = set(members)
        self.members = tuple(g for g in parent.elements if g in mset)
        self._members = frozenset(self.members)
        self.generators = tuple(generators)

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, g) -> bool:
        return g in self._members

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.parent == other.parent
            and self._members == other._members
        )

    def __hash__(self):
        return hash((self.parent, self._members))

    def __repr__(self):
        fmt = self.parent.format_element
        return f"Subgroup({self.parent}, {{{', '.join(fmt(g) for g in self.members)}}})"

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.order == self.parent.order


def subgroup_closure(G: Group, gens: Iterable = ()) -> Subgroup:
    """Smallest subgroup of ``G`` containing ``gens``.

    >>> subgroup_closure(Group([4]), [(2,)]).members
    ((0,), (2,))
    """
    gens = tuple(G.check(g) for g in gens)
    members = {G.identity}
    frontier = [G.identity]
    # in a finite group the closure under multiplication by generators is a subgroup
    while frontier:
        nxt = []
        for a in frontier:
            for s in gens:
                b = G.mul(a, s)
                if b not in members:
                    members.add(b)
                    nxt.append(b)
        frontier = nxt
    return Subgroup(G, members, gens)


def whole_group(G: Group) -> Subgroup:
    gens = []
    for i, m in enumerate(G.moduli):
        g = [0] * G.rank
        g[i] = 1 % m
        gens.append(tuple(g))
    return Subgroup(G, G.elements, gens)


def trivial_subgroup(G: Group) -> Subgroup:
    return Subgroup(G, [G.identity], ())


def all_subgroups(G: Group) -> list[Subgroup]:
    """Every subgroup of ``G``, sorted by order then by member list."""
    cyclic = {}
    for g in G.elements:
        H = subgroup_closure(G, [g])
        cyclic.setdefault(H._members, H)
    found = {H._members: H for H in cyclic.values()}
    frontier = list(found.values())
    while frontier:
        nxt = []
        for H in frontier:
            for C in cyclic.values():
                if C._members <= H._members:
                    continue
                J = subgroup_closure(G, H.generators + C.generators)
                if J._members not in found:
                    found[J._members] = J
                    nxt.append(J)
        frontier = nxt
    return sorted(found.values(), key=lambda H: (H.order, [G.index(h) for h in H.members]))


def _check_subgroup(G: Group, H: Subgroup) -> None:
    if H.parent != G:
        raise MismatchError(f"{H!r} is not a subgroup of {G}")


class QuotientGroup:
    """G/H with coset representatives chosen as the smallest element of each coset."""

    def __init__(self, parent: Group, sub: Subgroup):
        _check_subgroup(parent, sub)
        self.parent = parent
        self.sub = sub
        projection = {}
        reps = []
        for g in parent.elements:
            if g in projection:
                continue
            reps.append(g)
            for h in sub.members:
                projection[parent.mul(g, h)] = g
        self.coset_reps = tuple(reps)
        self._projection = projection

    @property
    def order(self) -> int:
        return len(self.coset_reps)

    def project(self, g: Element) -> Element:
        return self._projection[self.parent.check(g)]

    def mul(self, a: Element, b: Element) -> Element:
        return self.project(self.parent.mul(a, b))

    def coset(self, rep: Element) -> tuple[Element, ...]:
        return tuple(g for g in self.parent.elements if self._projection[g] == rep)


def quotient_group(G: Group, H: Subgroup) -> QuotientGroup:
    return QuotientGroup(G, H)
