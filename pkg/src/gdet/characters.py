"""Characters of a product group, annihilators, dual cosets and restrictions.

The character with index a = (a1, ..., ar) sends g to
prod_i zeta_{m_i}^(a_i g_i), evaluated at the group's exponent level.
Characters multiply by adding indices, so the dual group is modelled on the
same residue tuples as the group itself.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .cyclotomic import CycNumber, field
from .errors import InternalConsistencyError, MismatchError, NoSeparatorError
from .groups import Element, Group, Subgroup, _check_subgroup, subgroup_closure


class Character:
    __slots__ = ("group", "index", "_steps")

    def __init__(self, group: Group, index):
        self.group = group
        self.index = group.check(index)
        N = group.exponent
        self._steps = tuple(a * (N // m) for a, m in zip(self.index, group.moduli))

    def log(self, g: Element) -> int:
        """k with chi(g) = zeta_N^k, N the exponent of the group."""
        return sum(s * x for s, x in zip(self._steps, g)) % self.group.exponent

    def __call__(self, g: Element) -> CycNumber:
        return field(self.group.exponent).zeta(self.log(g))

    def __mul__(self, other: Character) -> Character:
        if other.group != self.group:
            raise MismatchError("characters of different groups")
        return Character(self.group, self.group.mul(self.index, other.index))

    def inverse(self) -> Character:
        return Character(self.group, self.group.inv(self.index))

    def is_trivial(self) -> bool:
        return not any(self.index)

    def __eq__(self, other):
        return isinstance(other, Character) and self.group == other.group and self.index == other.index

    def __hash__(self):
        return hash((self.group, self.index))

    def __repr__(self):
        return "chi(" + ",".join(map(str, self.index)) + ")"

    @property
    def name(self) -> str:
        return repr(self)


def character_eval(chi: Character, g) -> CycNumber:
    if isinstance(g, int):
        g = (g,)
    if not isinstance(g, tuple) or g not in chi.group:
        raise MismatchError(f"{g!r} is not an element of {chi.group}")
    return chi(g)


class DualSet:
    """An ordered set of characters of ``group`` (the full dual or an annihilator)."""

    def __init__(self, group: Group, characters: Iterable[Character]):
        self.group = group
        chars = sorted(set(characters), key=lambda c: group.index(c.index))
        self.characters = tuple(chars)
        self._indices = frozenset(c.index for c in chars)

    def __len__(self):
        return len(self.characters)

    def __iter__(self):
        return iter(self.characters)

    def __getitem__(self, i):
        return self.characters[i]

    def __contains__(self, chi) -> bool:
        return isinstance(chi, Character) and chi.group == self.group and chi.index in self._indices

    @property
    def indices(self) -> tuple[Element, ...]:
        return tuple(c.index for c in self.characters)

    def __repr__(self):
        return f"DualSet({self.group}, {list(self.characters)})"


def dual_group(G: Group) -> DualSet:
    return DualSet(G, (Character(G, a) for a in G.elements))


def annihilator(G: Group, H: Subgroup) -> DualSet:
    """Characters of G that are trivial on every member of H."""
    _check_subgroup(G, H)
    chars = [c for c in dual_group(G) if all(c.log(h) == 0 for h in H.members)]
    return DualSet(G, chars)


def dual_coset_reps(
    G: Group,
    H: Subgroup,
    choose: Callable[[Sequence[Character]], Character] | None = None,
) -> list[Character]:
    """One representative per coset of the annihilator of H in the dual of G.

    By default the representative is the smallest index in canonical order;
    ``choose`` picks one out of each coset (listed in canonical order) instead.
    """
    ann = annihilator(G, H)
    seen = set()
    reps = []
    for chi in dual_group(G):
        if chi.index in seen:
            continue
        coset = sorted((chi * a for a in ann), key=lambda c: G.index(c.index))
        seen.update(c.index for c in coset)
        reps.append(choose(coset) if choose else coset[0])
    return reps


class RestrictedCharacter:
    """A character of G restricted to the members of a subgroup."""

    def __init__(self, subgroup: Subgroup, values: dict[Element, CycNumber], source: Character | None = None):
        self.subgroup = subgroup
        self.values = dict(values)
        self.source = source
        self._key = tuple(values[h] for h in subgroup.members)

    def __call__(self, h: Element) -> CycNumber:
        try:
            return self.values[h]
        except KeyError:
            raise MismatchError(f"{h!r} is not in {self.subgroup!r}") from None

    def __eq__(self, other):
        return (
            isinstance(other, RestrictedCharacter)
            and self.subgroup == other.subgroup
            and self._key == other._key
        )

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"{self.source!r}|H" if self.source is not None else f"RestrictedCharacter({self.values})"


def restrict(chi: Character, H: Subgroup) -> RestrictedCharacter:
    if H.parent != chi.group:
        raise MismatchError("character and subgroup live in different groups")
    return RestrictedCharacter(H, {h: chi(h) for h in H.members}, chi)


def restrict_characters(reps: Sequence[Character], H: Subgroup) -> list[RestrictedCharacter]:
    """Restrict dual coset representatives to H; they must stay pairwise distinct."""
    out = [restrict(chi, H) for chi in reps]
    if len(set(out)) != len(out):
        raise InternalConsistencyError(
            "two dual coset representatives agree on the subgroup; the coset decomposition is wrong"
        )
    return out


def _generators(G: Group, chars: DualSet) -> list[Character]:
    """A small generating set of a dual subset that is closed under multiplication."""
    gens: list[Character] = []
    span = {G.identity}
    for chi in chars:
        if chi.index not in span:
            gens.append(chi)
            span = set(subgroup_closure(G, [c.index for c in gens]).members)
    return gens


def separating_character(G: Group, H: Subgroup, g) -> Character:
    """A character trivial on H but not on ``g``.

    The annihilator is generated by a few characters; if each generator were
    trivial on g then every annihilator element would be, so one generator
    must separate.  An exhaustive scan backs this up.
    """
    _check_subgroup(G, H)
    g = G.check(g)
    if g in H:
        raise NoSeparatorError(f"{G.format_element(g)} lies in the subgroup; nothing separates it")
    ann = annihilator(G, H)
    for chi in _generators(G, ann):
        if chi.log(g):
            return chi
    for chi in ann:
        if chi.log(g):
            return chi
    raise InternalConsistencyError(f"no character of the annihilator separates {g!r}")
