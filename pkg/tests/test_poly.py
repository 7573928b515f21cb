import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gdet.cyclotomic import field
from gdet.detfact import dedekind_linear_forms
from gdet.errors import IncompleteAssignmentError, MismatchError, ParseError
from gdet.groups import Group
from gdet.poly import Poly, degree_report, parse_poly, poly_arith, poly_eval, poly_ring


@pytest.fixture
def z3():
    R = poly_ring(Group([3]))
    return R, [R.var((i,)) for i in range(3)], field(3).zeta()


def test_arith_examples(z3):
    R, (x0, x1, x2), w = z3
    assert poly_arith(x0 + x1, x0 - x1, "mul") == x0**2 - x1**2
    p = x0 * x1 + x2.scale(w)
    assert poly_arith(p, poly_arith(p, mode="neg"), "add").is_zero()
    lhs = (x0 + x1.scale(w)) * (x0 + x1.scale(w * w))
    assert lhs == x0**2 - x0 * x1 + x1**2
    assert poly_arith(x0, mode="scale", c=Fraction(1, 2)) * 2 == x0


def test_ring_mismatch():
    a = poly_ring(Group([3])).var((0,))
    b = poly_ring(Group([4])).var((0,))
    with pytest.raises(MismatchError):
        a + b


def test_degree_report_examples():
    R = poly_ring(Group([4]))
    x = [R.var((i,)) for i in range(4)]
    assert degree_report(x[0] ** 2 + x[2] ** 2 - 2 * x[1] * x[3]) == (2, True)
    assert degree_report(x[0] + x[1] ** 2) == (2, False)
    assert degree_report(x[0]) == (1, True)
    assert degree_report(R.zero()) == (-math.inf, True)


def test_eval_examples(z3):
    R, (x0, x1, x2), w = z3
    Z2 = poly_ring(Group([2]))
    p = Z2.var((0,)) ** 2 - Z2.var((1,)) ** 2
    assert poly_eval(p, {(0,): 2, (1,): 1}) == 3
    theta = x0 * 0 + 1
    for f in dedekind_linear_forms(Group([3])):
        theta = theta * f
    assert poly_eval(theta, {(0,): 1, (1,): 1, (2,): 1}) == 0
    assert poly_eval(R.zero(), {}) == 0


def test_eval_missing_variable(z3):
    R, (x0, x1, _), _ = z3
    with pytest.raises(IncompleteAssignmentError):
        poly_eval(x0 * x1, {(0,): 1})


def test_text_form(z3):
    R, (x0, x1, x2), w = z3
    p = x0**2 - x0 * x1.scale(w) + 3
    assert p.to_text() == "[1/1, 0/1]*x[0]^2 + [0/1, -1/1]*x[0]*x[1] + [3/1, 0/1]"
    assert str(p) == "x[0]^2 - ω*x[0]*x[1] + 3"
    assert parse_poly(R, p.to_text()) == p
    assert parse_poly(R, "0").is_zero()
    V = poly_ring(Group([2, 2]))
    q = V.var((1, 0)) * V.var((0, 1))
    assert q.to_text() == "[1/1]*x[(0,1)]*x[(1,0)]"
    assert parse_poly(V, q.to_text()) == q


@pytest.mark.parametrize("bad", ["x[0]", "[1/1, 0/1]*y[0]", "[1/1, 0/1]*x[0]^", "[a, 0]"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_poly(poly_ring(Group([3])), bad)


RING = poly_ring(Group([4]))


@st.composite
def polys(draw, max_terms=4):
    fld = RING.field
    terms = []
    for _ in range(draw(st.integers(0, max_terms))):
        mono = tuple(draw(st.lists(st.integers(0, 2), min_size=4, max_size=4)))
        coords = draw(st.lists(st.fractions(-5, 5, max_denominator=4), min_size=2, max_size=2))
        terms.append((mono, fld.from_coords(coords)))
    return Poly.from_terms(RING, terms)


@st.composite
def homogeneous_polys(draw, degree):
    fld = RING.field
    terms = []
    for _ in range(draw(st.integers(1, 3))):
        mono = [0] * 4
        for _ in range(degree):
            mono[draw(st.integers(0, 3))] += 1
        terms.append((tuple(mono), fld(draw(st.integers(1, 5)))))
    return Poly.from_terms(RING, terms)


@settings(max_examples=60)
@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert (p - p).terms == {}
    assert parse_poly(RING, p.to_text()) == p


@given(homogeneous_polys(2), homogeneous_polys(3))
def test_degree_additive(p, q):
    assert degree_report(p * q) == (5, True)
