import pytest

from gdet.characters import (
    Character,
    annihilator,
    character_eval,
    dual_coset_reps,
    dual_group,
    restrict,
    restrict_characters,
    separating_character,
)
from gdet.cyclotomic import field
from gdet.errors import InternalConsistencyError, MismatchError, NoSeparatorError
from gdet.groups import Group, all_subgroups, quotient_group, subgroup_closure, trivial_subgroup, whole_group

SMALL = [[1], [2], [3], [4], [2, 2], [5], [6], [7], [8], [4, 2], [2, 2, 2], [3, 3], [4, 4], [2, 2, 4], [16]]


def brute_force_dual(G, H):
    """All multiplicative maps H -> N-th roots of unity.

    Depth-first over value tables (as exponents of zeta_N), pruning as soon as
    an assigned product disagrees with the assigned values.
    """
    N = G.exponent
    F = field(N)
    members = H.members
    found = []

    def extend(table):
        if len(table) == len(members):
            found.append(tuple(F.zeta(table[h]) for h in members))
            return
        h = members[len(table)]
        for v in range(N):
            table[h] = v
            if all(
                G.mul(a, b) not in table or table[G.mul(a, b)] == (table[a] + table[b]) % N
                for a in table
                for b in table
            ):
                extend(table)
            del table[h]

    extend({})
    return set(found)


def test_character_eval_examples():
    Z3 = Group([3])
    w = field(3).zeta()
    assert character_eval(Character(Z3, (1,)), 1) == w
    G = Group([4, 2])
    for g in G.elements:
        assert character_eval(Character(G, (0, 0)), g) == 1
    assert character_eval(Character(G, (1, 1)), (2, 1)) == 1


def test_character_eval_mismatch():
    with pytest.raises(MismatchError):
        character_eval(Character(Group([4]), (1,)), (1, 0))


def test_dual_group_examples():
    Z3 = Group([3])
    w = field(3).zeta()
    chars = dual_group(Z3)
    assert len(chars) == 3
    assert [chi((1,)) for chi in chars] == [1, w, w**2]
    assert len(dual_group(Group([1]))) == 1
    V = Group([2, 2])
    table = {(chi.index, g): chi(g) for chi in dual_group(V) for g in V.elements}
    assert len(table) == 16 and set(table.values()) == {field(2).one, -field(2).one}


def test_annihilator_examples():
    Z4 = Group([4])
    H = subgroup_closure(Z4, [(2,)])
    assert annihilator(Z4, H).indices == ((0,), (2,))
    for moduli in SMALL:
        G = Group(moduli)
        assert annihilator(G, whole_group(G)).indices == (G.identity,)
        assert annihilator(G, trivial_subgroup(G)).indices == G.elements


def test_annihilator_foreign_subgroup():
    with pytest.raises(MismatchError):
        annihilator(Group([4]), trivial_subgroup(Group([2])))


def test_dual_coset_reps_examples():
    Z4 = Group([4])
    H = subgroup_closure(Z4, [(2,)])
    assert [c.index for c in dual_coset_reps(Z4, H)] == [(0,), (1,)]
    assert [c.index for c in dual_coset_reps(Z4, whole_group(Z4))] == list(Z4.elements)
    assert [c.index for c in dual_coset_reps(Z4, trivial_subgroup(Z4))] == [(0,)]


def test_restrict_examples():
    Z4 = Group([4])
    H = subgroup_closure(Z4, [(2,)])
    r = restrict_characters(dual_coset_reps(Z4, H), H)
    assert [psi((2,)) for psi in r] == [1, -1]
    T = trivial_subgroup(Z4)
    (psi,) = restrict_characters(dual_coset_reps(Z4, T), T)
    assert psi.values == {(0,): 1}
    W = whole_group(Z4)
    r = restrict_characters(dual_coset_reps(Z4, W), W)
    assert [psi.values for psi in r] == [{g: chi(g) for g in Z4.elements} for chi in dual_group(Z4)]


def test_restrict_duplicates_detected():
    Z4 = Group([4])
    H = subgroup_closure(Z4, [(2,)])
    with pytest.raises(InternalConsistencyError):
        restrict_characters([Character(Z4, (0,)), Character(Z4, (2,))], H)


def test_separating_character_examples():
    Z4 = Group([4])
    H = subgroup_closure(Z4, [(2,)])
    chi = separating_character(Z4, H, (1,))
    assert chi.index == (2,) and chi((1,)) == -1 and chi((2,)) == 1
    Z3 = Group([3])
    chi = separating_character(Z3, trivial_subgroup(Z3), (1,))
    assert chi.index == (1,) and chi((1,)) == field(3).zeta()
    Z2 = Group([2])
    assert separating_character(Z2, trivial_subgroup(Z2), (1,))((1,)) == -1


def test_separating_character_rejects_member():
    Z4 = Group([4])
    with pytest.raises(NoSeparatorError):
        separating_character(Z4, subgroup_closure(Z4, [(2,)]), (2,))


@pytest.mark.parametrize("moduli", SMALL, ids=str)
def test_character_properties_exhaustive(moduli):
    G = Group(moduli)
    chars = list(dual_group(G))
    assert len({tuple(chi(g) for g in G.elements) for chi in chars}) == G.order
    for chi in chars:
        assert chi(G.identity) == 1
        for a in G.elements:
            for b in G.elements:
                assert chi(G.mul(a, b)) == chi(a) * chi(b)
    for H in all_subgroups(G):
        ann = annihilator(G, H)
        assert len(ann) * H.order == G.order
        # the annihilator is exactly the lift of the quotient's characters
        Q = quotient_group(G, H)
        assert set(ann.indices) == {
            chi.index for chi in chars if all(chi(g) == chi(Q.project(g)) for g in G.elements)
        }
        reps = dual_coset_reps(G, H)
        assert len(reps) == H.order
        cosets = [frozenset(G.mul(r.index, a) for a in ann.indices) for r in reps]
        assert len(set(cosets)) == len(reps)
        assert frozenset().union(*cosets) == frozenset(G.elements)
        restricted = restrict_characters(reps, H)
        for psi in restricted:
            for a in H.members:
                for b in H.members:
                    assert psi(G.mul(a, b)) == psi(a) * psi(b)
        for g in G.elements:
            if g not in H:
                chi = separating_character(G, H, g)
                assert chi in ann
                assert all(chi(h) == 1 for h in H.members) and chi(g) != 1


@pytest.mark.parametrize("moduli", [[2], [3], [4], [2, 2], [5], [6], [7], [8], [4, 2], [2, 2, 2]], ids=str)
def test_restrictions_equal_brute_force_dual(moduli):
    G = Group(moduli)
    for H in all_subgroups(G):
        restricted = restrict_characters(dual_coset_reps(G, H), H)
        maps = {tuple(psi(h) for h in H.members) for psi in restricted}
        assert len(maps) == H.order
        assert maps == brute_force_dual(G, H)


def test_restriction_independent_of_coset_choice():
    G = Group([4, 2])
    H = subgroup_closure(G, [(1, 0)])
    canonical = restrict_characters(dual_coset_reps(G, H), H)
    last = restrict_characters(dual_coset_reps(G, H, choose=lambda coset: coset[-1]), H)
    assert canonical == last
    assert restrict(Character(G, (1, 1)), H) == restrict(Character(G, (1, 0)), H)
