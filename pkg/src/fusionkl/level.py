"""Admissible levels k = -2 + p/q and the arithmetic attached to them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BadQ, InvalidArgument, NonCoprime, UnsupportedP

FLAVORS = ("standard", "twisted", "reverse", "twisted-reverse")
SIGNS = ("+", "-")


@dataclass(frozen=True, order=True)
class Level:
    p: int
    q: int

    def __post_init__(self):
        _validate(self.p, self.q)

    @property
    def kappa(self) -> Fraction:
        return Fraction(self.p, self.q)

    @property
    def k(self) -> Fraction:
        return self.kappa - 2

    def __str__(self):
        return f"{self.p}/{self.q}"

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q}


def _validate(p, q):
    if not isinstance(p, int) or not isinstance(q, int):
        raise InvalidArgument(f"p and q must be integers, got {p!r}, {q!r}")
    if p < 2:
        raise UnsupportedP(f"p={p} is not supported; admissible levels need p >= 2")
    if q < 1:
        raise BadQ(f"q={q} must be at least 1")
    if math.gcd(p, q) != 1:
        raise NonCoprime(f"gcd({p},{q}) = {math.gcd(p, q)} != 1")


def make_level(p: int, q: int) -> Level:
    return Level(p, q)


@dataclass(frozen=True)
class BraidingVariant:
    flavor: str = "standard"
    sign: str = "+"

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise InvalidArgument(f"unknown braiding flavor {self.flavor!r}")
        if self.sign not in SIGNS:
            raise InvalidArgument(f"twist sign must be '+' or '-', got {self.sign!r}")

    @property
    def is_reverse(self) -> bool:
        return self.flavor in ("reverse", "twisted-reverse")

    @property
    def is_twisted(self) -> bool:
        return self.flavor in ("twisted", "twisted-reverse")

    def to_json(self) -> dict:
        return {"variant": self.flavor, "twist": self.sign}


def all_variants() -> list[BraidingVariant]:
    return [BraidingVariant(f, s) for f in FLAVORS for s in SIGNS]


STANDARD = BraidingVariant("standard", "+")


def conformal_weight(lv: Level, r: int) -> Fraction:
    """Lowest L(0)-eigenvalue h_r = q(r^2 - 1)/(4p) of the index-r module."""
    if r < 1:
        raise InvalidArgument(f"index r={r} must be >= 1")
    return Fraction(lv.q * (r * r - 1), 4 * lv.p)


def parity(weight: int) -> int:
    """Z/2 grading of an sl2 highest weight (r-1 for the index-r affine module)."""
    if weight < 0:
        raise InvalidArgument(f"weight {weight} must be nonnegative")
    return weight % 2


def cocycle_sign(i1: int, i2: int, i3: int) -> int:
    for i in (i1, i2, i3):
        if i not in (0, 1):
            raise InvalidArgument(f"{i} is not an element of Z/2")
    return -1 if i1 and i2 and i3 else 1


def level_representations(p: int, qprime: int) -> list[tuple[int, int, str]]:
    """All (q, n, sign) with q' = sign*q + 2np, 1 <= q <= p-1, n >= 0 (n >= 1 for '-').

    Found by exhaustive search; callers rely on there being exactly one.
    """
    found = []
    for n in range((qprime + p) // (2 * p) + 2):
        q_plus = qprime - 2 * n * p
        if 1 <= q_plus <= p - 1:
            found.append((q_plus, n, "+"))
        if n >= 1:
            q_minus = 2 * n * p - qprime
            if 1 <= q_minus <= p - 1:
                found.append((q_minus, n, "-"))
    return found


def classify_level(p: int, qprime: int) -> tuple[Level, BraidingVariant]:
    """Canonical level equivalent to -2 + p/q' and the braiding/twist it carries there."""
    make_level(p, qprime)
    reps = level_representations(p, qprime)
    if len(reps) != 1:
        raise AssertionError(f"expected a unique representation of {qprime}, got {reps}")
    q, n, sign = reps[0]
    odd = n % 2 == 1
    if sign == "+":
        variant = BraidingVariant("twisted", "-") if odd else BraidingVariant("standard", "+")
    else:
        variant = BraidingVariant("twisted-reverse", "-") if odd else BraidingVariant("reverse", "+")
    return Level(p, q), variant


def parse_level(text: str) -> Level:
    try:
        p_str, q_str = text.split("/")
        p, q = int(p_str), int(q_str)
    except ValueError:
        raise InvalidArgument(f"level must look like p/q, got {text!r}") from None
    return make_level(p, q)
