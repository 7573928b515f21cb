"""Sparse polynomials in the variables x_g (g in G) over Q(zeta_N).

A monomial is a tuple of exponents indexed by the canonical element order of
G; a polynomial is a dict from monomials to nonzero ``CycNumber`` coefficients.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from operator import add

from .cyclotomic import CycNumber, field, format_cyc
from .errors import IncompleteAssignmentError, MismatchError, ParseError
from .groups import Element, Group


class PolyRing:
    """Q(zeta_N)[x_g : g in G] with N the exponent of G."""

    def __init__(self, group: Group):
        self.group = group
        self.nvars = group.order
        self.field = field(group.exponent)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.group == other.group

    def __hash__(self):
        return hash(("PolyRing", self.group))

    def __repr__(self):
        return f"PolyRing({self.group})"

    def zero(self) -> Poly:
        return Poly(self, {})

    def one(self) -> Poly:
        return self.const(1)

    def const(self, c) -> Poly:
        c = self.field(c)
        return Poly(self, {(0,) * self.nvars: c} if c else {})

    def var(self, g: Element) -> Poly:
        i = self.group.index(g)
        mono = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Poly(self, {mono: self.field.one})

    def var_name(self, i: int) -> str:
        g = self.group.elements[i]
        return f"x[{self.group.format_element(g)}]"


@lru_cache(maxsize=None)
def poly_ring(group: Group) -> PolyRing:
    return PolyRing(group)


def _grlex_key(mono):
    return (sum(mono), mono)


class Poly:
    """Immutable sparse polynomial.  Equal polynomials have equal term dicts."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    @classmethod
    def from_terms(cls, ring: PolyRing, terms) -> Poly:
        """Build from (monomial, coefficient) pairs, merging and dropping zeros."""
        acc: dict = {}
        fld = ring.field
        for mono, c in terms:
            mono = tuple(mono)
            if len(mono) != ring.nvars:
                raise MismatchError(f"monomial {mono} has {len(mono)} exponents, ring has {ring.nvars}")
            c = fld(c)
            acc[mono] = acc[mono] + c if mono in acc else c
        return cls(ring, {m: c for m, c in acc.items() if c})

    def _check(self, other: Poly):
        if not isinstance(other, Poly):
            return None
        if other.ring != self.ring:
            raise MismatchError(f"polynomials over {self.ring} and {other.ring}")
        return other

    def _lift(self, other):
        if isinstance(other, Poly):
            return self._check(other)
        if isinstance(other, (int, Fraction, CycNumber)):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            if m in out:
                s = out[m] + c
                if s:
                    out[m] = s
                else:
                    del out[m]
            else:
                out[m] = c
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> Poly:
        c = self.ring.field(c)
        if not c:
            return self.ring.zero()
        if c == 1:
            return self
        return Poly(self.ring, {m: a * c for m, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNumber)):
            return self.scale(other)
        other = self._check(other)
        if other is None:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for m2, c2 in b.items():
            for m1, c1 in a.items():
                m = tuple(map(add, m1, m2))
                prev = get(m)
                out[m] = c1 * c2 if prev is None else prev + c1 * c2
        return Poly(self.ring, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = self.ring.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction, CycNumber)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list:
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def degree(self):
        if not self.terms:
            return -math.inf
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def variables(self) -> set[int]:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def __call__(self, assignment) -> CycNumber:
        return poly_eval(self, assignment)

    def to_text(self) -> str:
        """Canonical text form; ``parse_poly`` inverts it."""
        if not self.terms:
            return "0"
        return " + ".join(
            c.serialize() + "".join(_mono_factors(self.ring, m)) for m, c in self.sorted_terms()
        )

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            body = "*".join(f[1:] for f in _mono_factors(self.ring, m))
            s = format_cyc(c)
            if not body:
                term = s
            elif s == "1":
                term = body
            elif s == "-1":
                term = "-" + body
            else:
                term = f"{s}*{body}"
            out.append(term)
        return " + ".join(out).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({self})"


def _mono_factors(ring: PolyRing, mono) -> list[str]:
    out = []
    for i, e in enumerate(mono):
        if e:
            name = ring.var_name(i)
            out.append(f"*{name}" if e == 1 else f"*{name}^{e}")
    return out


def poly_arith(p: Poly, q=None, mode: str = "add", c=None) -> Poly:
    if mode == "add":
        return p + p._check(q)
    if mode == "mul":
        return p * p._check(q)
    if mode == "neg":
        return -p
    if mode == "scale":
        return p.scale(c)
    raise ValueError(f"unknown mode {mode!r}")


def degree_report(p: Poly) -> tuple:
    """(total degree, homogeneous); the zero polynomial reports (-inf, True)."""
    return p.degree(), p.is_homogeneous()


def poly_eval(p: Poly, assignment) -> CycNumber:
    """Evaluate ``p`` with ``assignment`` mapping group elements to scalars."""
    ring = p.ring
    fld = ring.field
    values = {}
    for i in p.variables():
        g = ring.group.elements[i]
        if g in assignment:
            values[i] = fld(assignment[g])
        elif ring.group.rank == 1 and g[0] in assignment:
            values[i] = fld(assignment[g[0]])
        else:
            raise IncompleteAssignmentError(f"no value assigned to {ring.var_name(i)}")
    total = fld.zero
    for m, c in p.terms.items():
        term = c
        for i, e in enumerate(m):
            if e:
                term = term * values[i] ** e
        total = total + term
    return total


_VAR = re.compile(r"\*x\[(\(?[0-9, ]*\)?)\](?:\^([0-9]+))?")


def parse_poly(ring: PolyRing, text: str) -> Poly:
    """Parse the canonical text form written by ``Poly.to_text``."""
    text = text.strip()
    if text == "0":
        return ring.zero()
    terms = []
    pos = 0
    for chunk in text.split(" + "):
        if not chunk.startswith("["):
            raise ParseError("expected a coefficient list", text, pos)
        close = chunk.index("]")
        try:
            coords = [Fraction(s.strip()) for s in chunk[1:close].split(",")]
        except (ValueError, ZeroDivisionError):
            raise ParseError("bad coefficient", text, pos) from None
        coeff = ring.field.from_coords(coords)
        mono = [0] * ring.nvars
        rest = chunk[close + 1 :]
        at = 0
        for match in _VAR.finditer(rest):
            if match.start() != at:
                raise ParseError("unexpected text in monomial", text, pos + close + 1 + at)
            lit = match.group(1)
            nums = [int(s) for s in lit.strip("()").split(",")]
            g = ring.group.check(tuple(nums))
            mono[ring.group.index(g)] += int(match.group(2) or 1)
            at = match.end()
        if at != len(rest):
            raise ParseError("unexpected text in monomial", text, pos + close + 1 + at)
        terms.append((tuple(mono), coeff))
        pos += len(chunk) + 3
    return Poly.from_terms(ring, terms)
