"""Exact arithmetic in the cyclotomic field Q(zeta_N).

A ``CycNumber`` stores its coordinates in the power basis
1, z, ..., z^(phi(N)-1) with z = exp(2*pi*i/N).  Internally the coordinates are
kept as integer numerators over one positive common denominator, reduced so the
representation is canonical and equality is tuple equality.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .errors import CycZeroDivisionError, DomainError, LevelError


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first.

    >>> cyclotomic_polynomial(12)
    (1, 0, -1, 0, 1)
    """
    if not isinstance(n, int) or n <= 0:
        raise DomainError(f"cyclotomic polynomial needs a positive integer, got {n!r}")
    num = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        num = _exact_div_monic(num, cyclotomic_polynomial(d))
    return tuple(num)


def _exact_div_monic(num: list[int], den: tuple[int, ...]) -> list[int]:
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j, b in enumerate(den):
                num[i - dd + j] -= c * b
    if any(num[:dd]):
        raise ArithmeticError("inexact division by cyclotomic polynomial")
    return quot


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


class CyclotomicField:
    """Shared reduction data for Q(zeta_N).  Use ``field(N)`` to get the cached instance."""

    def __init__(self, level: int):
        if not isinstance(level, int) or level <= 0:
            raise DomainError(f"invalid cyclotomic level {level!r}")
        self.level = level
        self.modulus = cyclotomic_polynomial(level)
        self.degree = d = len(self.modulus) - 1
        # power-basis coordinates of z^k for 0 <= k < max(level, 2d - 1)
        powers = []
        vec = [0] * d
        vec[0] = 1
        for _ in range(max(level, 2 * d - 1)):
            powers.append(tuple(vec))
            top = vec[-1]
            vec = [0] + vec[:-1]
            if top:
                for j in range(d):
                    vec[j] -= top * self.modulus[j]
        self._powers = tuple(powers)
        self.zero = CycNumber._raw(self, (0,) * d, 1)
        self.one = CycNumber._raw(self, (1,) + (0,) * (d - 1), 1)
        self._zeta = tuple(CycNumber._raw(self, powers[k], 1) for k in range(level))
        self._zeta_lookup = {z._num: k for k, z in enumerate(self._zeta)}

    def __repr__(self):
        return f"CyclotomicField({self.level})"

    def zeta(self, k: int = 1) -> CycNumber:
        """``z**k`` for the primitive root z = exp(2*pi*i/N)."""
        return self._zeta[k % self.level]

    def __call__(self, value) -> CycNumber:
        if isinstance(value, CycNumber):
            if value.field is not self:
                raise LevelError(f"level {value.level} number used at level {self.level}")
            return value
        if isinstance(value, int):
            return CycNumber._raw(self, (value,) + (0,) * (self.degree - 1), 1)
        if isinstance(value, Rational):
            f = Fraction(value)
            return CycNumber._raw(self, (f.numerator,) + (0,) * (self.degree - 1), f.denominator)
        raise TypeError(f"cannot coerce {value!r} into Q(zeta_{self.level})")

    def from_coords(self, coords) -> CycNumber:
        coords = [Fraction(c) for c in coords]
        if len(coords) != self.degree:
            raise LevelError(f"expected {self.degree} coordinates at level {self.level}, got {len(coords)}")
        den = math.lcm(*(c.denominator for c in coords))
        return CycNumber._make(self, tuple(int(c * den) for c in coords), den)

    def log_root_of_unity(self, c: CycNumber):
        """Return k with ``c == z**k``, or None if ``c`` is not an N-th root of unity."""
        if c.den != 1:
            return None
        return self._zeta_lookup.get(c._num)


@lru_cache(maxsize=None)
def field(level: int) -> CyclotomicField:
    return CyclotomicField(level)


class CycNumber:
    """An element of Q(zeta_N).  Immutable; supports +, -, *, /, ** and ==."""

    __slots__ = ("field", "_num", "den", "_hash")

    @classmethod
    def _raw(cls, fld, num, den):
        self = object.__new__(cls)
        self.field = fld
        self._num = num
        self.den = den
        self._hash = None
        return self

    @classmethod
    def _make(cls, fld, num, den):
        if den != 1:
            if den < 0:
                num = tuple(-a for a in num)
                den = -den
            g = math.gcd(den, *num)
            if g != 1:
                num = tuple(a // g for a in num)
                den //= g
        return cls._raw(fld, num, den)

    def __new__(cls, level: int, coords):
        return field(level).from_coords(coords)

    def __reduce__(self):
        return (CycNumber, (self.level, self.coords))

    @property
    def level(self) -> int:
        return self.field.level

    @property
    def coords(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self.den) for a in self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self):
        return any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def _coerce(self, other):
        if isinstance(other, CycNumber):
            if other.field is not self.field:
                raise LevelError(f"level mismatch: {self.level} vs {other.level}")
            return other
        if isinstance(other, (int, Rational)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return CycNumber._make(self.field, tuple(a + b for a, b in zip(self._num, other._num)), self.den)
        d1, d2 = self.den, other.den
        return CycNumber._make(
            self.field, tuple(a * d2 + b * d1 for a, b in zip(self._num, other._num)), d1 * d2
        )

    __radd__ = __add__

    def __neg__(self):
        return CycNumber._raw(self.field, tuple(-a for a in self._num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        fld = self.field
        a, b = self._num, other._num
        d = fld.degree
        if d == 1:
            return CycNumber._make(fld, (a[0] * b[0],), self.den * other.den)
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:d]
        powers = fld._powers
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                for j, p in enumerate(powers[k]):
                    if p:
                        out[j] += c * p
        return CycNumber._make(fld, tuple(out), self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> CycNumber:
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi_N."""
        if self.is_zero():
            raise CycZeroDivisionError("inverse of zero in a cyclotomic field")
        fld = self.field
        a = [Fraction(c) for c in self._num]
        s = _poly_inverse_mod(a, [Fraction(c) for c in fld.modulus])
        s = s + [Fraction(0)] * (fld.degree - len(s))
        return fld.from_coords(s) * self.den

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, CycNumber):
            return self.field is other.field and self.den == other.den and self._num == other._num
        if isinstance(other, (int, Rational)):
            return self.is_rational() and Fraction(self._num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._num[0], self.den))
            else:
                self._hash = hash((self.field.level, self._num, self.den))
        return self._hash

    def conjugate(self) -> CycNumber:
        """Complex conjugate: z -> z^-1."""
        fld = self.field
        total = fld.zero
        for k, a in enumerate(self._num):
            if a:
                total = total + fld.zeta(-k) * a
        return total / self.den

    def __complex__(self):
        z = cmath.exp(2j * cmath.pi / self.level)
        return sum(a * z**k for k, a in enumerate(self._num)) / self.den

    def serialize(self) -> str:
        """``[num/den, ...]`` in power-basis order."""
        return "[" + ", ".join(f"{c.numerator}/{c.denominator}" for c in self.coords) + "]"

    def __repr__(self):
        return f"CycNumber({self.level}, {self.serialize()})"

    def __str__(self):
        return format_cyc(self)


def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = _trim(list(a))
    b = _trim(list(b))
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] / b[-1]
        shift = len(a) - len(b)
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] -= c * y
        _trim(a)
    return q, a


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _poly_inverse_mod(a, m):
    """s with s*a = 1 mod m, for a coprime to m over Q."""
    r0, r1 = _trim(list(m)), _trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if not r1:
        raise CycZeroDivisionError("element is not invertible modulo the cyclotomic polynomial")
    c = r1[0]
    s1 = [x / c for x in s1]
    _, rem = _poly_divmod(s1, m)
    return rem


def root_of_unity(level: int, m: int, k: int) -> CycNumber:
    """zeta_m^k realized at level N as zeta_N^(k*N/m).

    >>> root_of_unity(4, 4, 2) == -1
    True
    """
    if m <= 0 or level % m:
        raise LevelError(f"root order {m} does not divide level {level}")
    return field(level).zeta(k * (level // m))


def cyc_arith(a: CycNumber, b: CycNumber | None = None, mode: str = "add"):
    if mode == "add":
        return a + a._coerce(b)
    if mode == "mul":
        return a * a._coerce(b)
    if mode == "neg":
        return -a
    if mode == "inv":
        return a.inverse()
    if mode == "eq":
        return a == a._coerce(b)
    raise ValueError(f"unknown mode {mode!r}")


def _format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def root_symbol(level: int, k: int) -> str:
    if level == 3:
        return "ω" if k == 1 else f"ω^{k}"
    return f"ζ{level}" if k == 1 else f"ζ{level}^{k}"


def format_cyc(c: CycNumber) -> str:
    """Human-readable form: rationals plainly, roots of unity as powers of ω or ζN."""
    if c.is_rational():
        return _format_rational(Fraction(c._num[0], c.den))
    k = c.field.log_root_of_unity(c)
    if k is not None:
        return root_symbol(c.level, k)
    k = c.field.log_root_of_unity(-c)
    if k is not None:
        return "-" + root_symbol(c.level, k)
    parts = []
    for i, q in enumerate(c.coords):
        if not q:
            continue
        if i == 0:
            parts.append(_format_rational(q))
            continue
        sym = root_symbol(c.level, i)
        if q == 1:
            parts.append(sym)
        elif q == -1:
            parts.append("-" + sym)
        else:
            parts.append(f"{_format_rational(q)}*{sym}")
    return "(" + " + ".join(parts).replace("+ -", "- ") + ")"
