"""Exact arithmetic in Q(w), w = exp(pi*i/(2p)), a primitive 4p-th root of unity.

Elements are residues modulo the cyclotomic polynomial Phi_{4p}, stored as an
integer numerator vector over a common positive denominator.  Keeping
everything in integers makes the inner loops (TL products, braid searches)
several times faster than a vector of Fractions.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache, reduce

from .errors import MixedLevels
from .level import Level


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # both low-degree-first, den monic, division known to be exact
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("n must be >= 1")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def poly_str(coeffs) -> str:
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if not c:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            xs = "x" if e == 1 else f"x^{e}"
            body = xs if mag == 1 else f"{mag}*{xs}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    head_sign, head = terms[0]
    out = ("-" if head_sign == "-" else "") + head
    for s, body in terms[1:]:
        out += f" {s} {body}"
    return out


class _Field:
    """Per-level tables: Phi_{4p} and the reductions of x^k for 0 <= k < 4p."""

    def __init__(self, p: int):
        self.p = p
        self.order = 4 * p
        self.phi = cyclotomic_polynomial(self.order)
        self.dim = len(self.phi) - 1
        table = []
        cur = [0] * self.dim
        cur[0] = 1
        for _ in range(self.order):
            table.append(tuple(cur))
            # multiply by x and reduce with the monic relation
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [c - top * f for c, f in zip(cur, self.phi)]
        self.powers = table

    def reduce(self, raw: list[int]) -> list[int]:
        out = list(raw[: self.dim]) + [0] * max(0, self.dim - len(raw))
        for k in range(self.dim, len(raw)):
            c = raw[k]
            if c:
                row = self.powers[k % self.order]
                for j in range(self.dim):
                    if row[j]:
                        out[j] += c * row[j]
        return out


@lru_cache(maxsize=None)
def _field(p: int) -> _Field:
    return _Field(p)


class CycNumber:
    __slots__ = ("level", "num", "den", "_hash")

    def __init__(self, level: Level, num, den: int = 1):
        f = _field(level.p)
        num = list(num)
        if len(num) != f.dim:
            num = f.reduce(num)
        if den < 0:
            num = [-c for c in num]
            den = -den
        g = reduce(math.gcd, num, den)
        if g > 1:
            num = [c // g for c in num]
            den //= g
        self.level = level
        self.num = tuple(num)
        self.den = den
        self._hash = None

    @classmethod
    def from_rational(cls, level: Level, value) -> "CycNumber":
        value = Fraction(value)
        dim = _field(level.p).dim
        return cls(level, [value.numerator] + [0] * (dim - 1), value.denominator)

    @classmethod
    def from_coeffs(cls, level: Level, coeffs) -> "CycNumber":
        coeffs = [Fraction(c) for c in coeffs]
        den = reduce(lambda a, b: a * b // math.gcd(a, b), (c.denominator for c in coeffs), 1)
        return cls(level, [int(c * den) for c in coeffs], den)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def _coerce(self, other) -> "CycNumber":
        if isinstance(other, CycNumber):
            if other.level.p != self.level.p:
                raise MixedLevels(f"cannot combine elements at p={self.level.p} and p={other.level.p}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycNumber.from_rational(self.level, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.den == o.den:
            return CycNumber(self.level, [a + b for a, b in zip(self.num, o.num)], self.den)
        return CycNumber(
            self.level,
            [a * o.den + b * self.den for a, b in zip(self.num, o.num)],
            self.den * o.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.level, [-a for a in self.num], self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.num, o.num
        raw = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        raw[i + j] += x * y
        return CycNumber(self.level, _field(self.level.p).reduce(raw), self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in the cyclotomic field")
        f = _field(self.level.p)
        # extended Euclid in Q[x]: find s with s*self = 1 mod Phi
        r0, r1 = [Fraction(c) for c in f.phi], list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        r1 = _trim(r1)
        while len(r1) > 1 or r1[0] == 0:
            quo, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, _trim(rem)
            s0, s1 = s1, _trim(_poly_sub(s0, _poly_mul(quo, s1)))
            if len(r1) == 1 and r1[0] == 0:
                raise ZeroDivisionError("element is not invertible")
        inv = [c / r1[0] for c in s1]
        return CycNumber.from_coeffs(self.level, _pad(inv, f.dim) if len(inv) <= f.dim else inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = CycNumber.from_rational(self.level, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "CycNumber":
        f = _field(self.level.p)
        raw = [0] * f.order
        for k, c in enumerate(self.num):
            raw[(-k) % f.order] += c
        return CycNumber(self.level, f.reduce(raw), self.den)

    def to_complex(self) -> complex:
        order = 4 * self.level.p
        total = 0j
        for k, c in enumerate(self.num):
            if c:
                total += c * cmath.exp(2j * math.pi * k / order)
        return total / self.den

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycNumber.from_rational(self.level, other)
        if not isinstance(other, CycNumber):
            return NotImplemented
        return self.level.p == other.level.p and self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.level.p, self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        coeffs = self.coeffs
        parts = []
        for k, c in enumerate(coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("w" if k == 1 else f"w^{k}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{abs(c)}*{mono}"
            else:
                body = str(abs(c))
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for s, body in parts[1:]:
            out += f" {s} {body}"
        return out

    def __repr__(self):
        return f"CycNumber(p={self.level.p}: {self})"


def _trim(poly):
    poly = list(poly)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly or [Fraction(0)]


def _pad(poly, n):
    return list(poly) + [Fraction(0)] * (n - len(poly))


def _poly_sub(a, b):
    n = max(len(a), len(b))
    return [x - y for x, y in zip(_pad(a, n), _pad(b, n))]


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_divmod(a, b):
    a = list(a)
    lead = b[-1]
    if len(a) < len(b):
        return [Fraction(0)], a
    quo = [Fraction(0)] * (len(a) - len(b) + 1)
    for i in range(len(quo) - 1, -1, -1):
        c = a[i + len(b) - 1] / lead
        quo[i] = c
        if c:
            for j, d in enumerate(b):
                a[i + j] -= c * d
    return quo, _trim(a[: len(b) - 1] or [Fraction(0)])


def cyc_root(lv: Level, exponent: int) -> CycNumber:
    """w^exponent with w = exp(pi*i/(2p))."""
    f = _field(lv.p)
    return CycNumber(lv, f.powers[exponent % f.order])


def one(lv: Level) -> CycNumber:
    return cyc_root(lv, 0)


def zero(lv: Level) -> CycNumber:
    return CycNumber.from_rational(lv, 0)


def zeta(lv: Level) -> CycNumber:
    """zeta = exp(pi*i*q/p)."""
    return cyc_root(lv, 2 * lv.q)


def braid_coefficient(lv: Level) -> CycNumber:
    """A = exp(pi*i*q/(2p)), the square root of zeta used by the braiding."""
    return cyc_root(lv, lv.q)


def loop_value(lv: Level) -> CycNumber:
    """delta = -zeta - zeta^{-1}."""
    return -(cyc_root(lv, 2 * lv.q) + cyc_root(lv, -2 * lv.q))


def conjugate(a: CycNumber) -> CycNumber:
    return a.conjugate()


def quantum_int(lv: Level, n: int) -> CycNumber:
    """[n] = (zeta^n - zeta^-n)/(zeta - zeta^-1), summed as zeta^{n-1} + ... + zeta^{1-n}."""
    if n < 0:
        return -quantum_int(lv, -n)
    f = _field(lv.p)
    raw = [0] * f.order
    for j in range(n):
        raw[(2 * lv.q * (n - 1 - 2 * j)) % f.order] += 1
    return CycNumber(lv, f.reduce(raw))


def to_complex(a: CycNumber) -> complex:
    return a.to_complex()
