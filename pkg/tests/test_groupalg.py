import random

import pytest
from hypothesis import given, settings, strategies as st

from gdet.characters import Character, annihilator, dual_group
from gdet.cyclotomic import field
from gdet.errors import MismatchError
from gdet.groupalg import (
    AlgElement,
    apply_T,
    fundamental_F,
    ga_multiply,
    generic_element,
    product,
    support,
)
from gdet.groups import Group, all_subgroups
from gdet.poly import poly_ring
from gdet.verify import random_element, random_poly


def xs(G):
    R = poly_ring(G)
    return [R.var(g) for g in G.elements]


def test_generic_element_examples():
    Z3 = Group([3])
    x0, x1, x2 = xs(Z3)
    w = field(3).zeta()
    assert generic_element(Z3, Character(Z3, (0,))).coeffs == {(0,): x0, (1,): x1, (2,): x2}
    assert generic_element(Z3) == generic_element(Z3, Character(Z3, (0,)))
    assert generic_element(Z3, Character(Z3, (1,))).coeffs == {(0,): x0, (1,): x1 * w, (2,): x2 * w * w}
    Z2 = Group([2])
    y0, y1 = xs(Z2)
    assert generic_element(Z2, Character(Z2, (1,))).coeffs == {(0,): y0, (1,): -y1}


def test_generic_element_mismatch():
    with pytest.raises(MismatchError):
        generic_element(Group([3]), Character(Group([4]), (1,)))


def test_multiply_examples():
    Z2 = Group([2])
    x0, x1 = xs(Z2)
    a = generic_element(Z2)
    b = generic_element(Z2, Character(Z2, (1,)))
    assert ga_multiply(a, b).coeffs == {(0,): x0**2 - x1**2}
    assert a * AlgElement.one(Z2) == a
    Z4 = Group([4])
    x = xs(Z4)
    c = generic_element(Z4) * generic_element(Z4, Character(Z4, (2,)))
    assert c.coeffs == {
        (0,): x[0] ** 2 + x[2] ** 2 - 2 * x[1] * x[3],
        (2,): 2 * x[0] * x[2] - x[1] ** 2 - x[3] ** 2,
    }
    assert support(c) == {(0,), (2,)}


def test_multiply_by_hand():
    # independent expansion of the Z/4 product, one convolution term at a time
    Z4 = Group([4])
    x = xs(Z4)
    sign = [1, -1, 1, -1]
    expected = {k: poly_ring(Z4).zero() for k in range(4)}
    for g in range(4):
        for h in range(4):
            expected[(g + h) % 4] = expected[(g + h) % 4] + x[g] * x[h] * sign[h]
    c = generic_element(Z4) * generic_element(Z4, Character(Z4, (2,)))
    assert all(c.coeff((k,)) == expected[k] for k in range(4))


def test_apply_T_examples():
    Z2 = Group([2])
    a = generic_element(Z2)
    assert apply_T(Character(Z2, (0,)), a) == a
    assert apply_T(Character(Z2, (1,)), a) == generic_element(Z2, Character(Z2, (1,)))
    Z4 = Group([4])
    rng = random.Random(4)
    alpha = random_element(Z4, rng, density=1.0)
    c1, c3 = Character(Z4, (1,)), Character(Z4, (3,))
    assert apply_T(c1, apply_T(c3, alpha)) == apply_T(c1 * c3, alpha) == alpha


def test_support_and_F_examples():
    Z3 = Group([3])
    assert support(AlgElement(Z3)) == set()
    theta = fundamental_F(product((generic_element(Z3, c) for c in dual_group(Z3)), Z3))
    te = AlgElement(Z3, {(0,): theta})
    assert support(te) == {(0,)}
    assert fundamental_F(te) == theta
    assert fundamental_F(generic_element(Z3)) == sum(xs(Z3)[1:], xs(Z3)[0])


GROUPS = [Group(m) for m in ([2], [3], [4], [2, 2], [6], [4, 2], [2, 2, 2])]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(GROUPS), st.randoms(use_true_random=False))
def test_T_is_homomorphism(G, rnd):
    rng = random.Random(rnd.random())
    a, b, c = (random_element(G, rng) for _ in range(3))
    chars = list(dual_group(G))
    chi, chi2 = rng.choice(chars), rng.choice(chars)
    assert apply_T(chi, a * b) == apply_T(chi, a) * apply_T(chi, b)
    assert apply_T(chi, apply_T(chi2, a)) == apply_T(chi * chi2, a)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert fundamental_F(a * b) == fundamental_F(a) * fundamental_F(b)
    assert fundamental_F(a + b) == fundamental_F(a) + fundamental_F(b)


@pytest.mark.parametrize("G", [Group(m) for m in ([3], [4], [2, 2], [5], [6], [7], [8], [4, 2], [2, 2, 2])], ids=str)
def test_F_of_twisted_generic_is_dedekind_factor(G):
    ring = poly_ring(G)
    for chi in dual_group(G):
        expected = ring.zero()
        for g in G.elements:
            expected = expected + ring.var(g).scale(chi(g))
        assert fundamental_F(generic_element(G, chi)) == expected


@pytest.mark.parametrize("G", [Group(m) for m in ([2], [3], [4], [2, 2], [5], [6], [7], [8], [4, 2], [2, 2, 2])], ids=str)
def test_fixed_point_characterization(G):
    rng = random.Random(G.order)
    for H in all_subgroups(G):
        ann = list(annihilator(G, H))
        on_h = random_element(G, rng, on=H.members, density=1.0)
        assert all(apply_T(chi, on_h) == on_h for chi in ann)
        for g in G.elements:
            if g in H:
                continue
            stray = on_h + AlgElement(G, {g: random_poly(G, rng, nterms=1) or poly_ring(G).one()})
            assert not all(apply_T(chi, stray) == stray for chi in ann)
        # converse on the averaging projection: fixed by all of ann, so supported on H
        avg = AlgElement(G)
        alpha = random_element(G, rng, density=1.0)
        for chi in ann:
            avg = avg + apply_T(chi, alpha)
        assert all(apply_T(chi, avg) == avg for chi in ann)
        assert support(avg) <= set(H.members)


def test_parallel_tree_fold_matches_left_fold():
    G = Group([4, 2])
    factors = [generic_element(G, chi) for chi in dual_group(G)]
    left = product(factors, G)
    layer = factors
    while len(layer) > 1:
        layer = [layer[i] * layer[i + 1] if i + 1 < len(layer) else layer[i] for i in range(0, len(layer), 2)]
    assert layer[0] == left
    assert left.to_text() == layer[0].to_text()
