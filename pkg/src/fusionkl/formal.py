"""Formal direct sums of indecomposable labels (shared by both sides)."""

from __future__ import annotations

from typing import Mapping

from .errors import InternalNonNegativity, MixedLevels
from .level import Level


class FormalSum:
    __slots__ = ("level", "terms")

    def __init__(self, level: Level, terms: Mapping | None = None):
        clean = {}
        for lab, m in (terms or {}).items():
            if lab.level != level:
                raise MixedLevels(f"label {lab} is at level {lab.level}, object at {level}")
            if m < 0:
                raise InternalNonNegativity(f"negative multiplicity {m} for {lab}")
            if m:
                clean[lab] = clean.get(lab, 0) + m
        self.level = level
        self.terms = dict(sorted(clean.items(), key=lambda kv: kv[0].sort_key()))

    @classmethod
    def of(cls, label, mult: int = 1):
        return cls(label.level, {label: mult})

    @classmethod
    def zero(cls, lv: Level):
        return cls(lv, {})

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if other.level != self.level:
            raise MixedLevels("cannot add objects at different levels")
        out = dict(self.terms)
        for lab, m in other.terms.items():
            out[lab] = out.get(lab, 0) + m
        return type(self)(self.level, out)

    def scaled(self, k: int):
        return type(self)(self.level, {lab: k * m for lab, m in self.terms.items()})

    def __eq__(self, other):
        return type(other) is type(self) and self.level == other.level and self.terms == other.terms

    def __hash__(self):
        return hash((type(self).__name__, self.level, tuple(self.terms.items())))

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def labels(self):
        return list(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(str(lab) if m == 1 else f"{m}*{lab}" for lab, m in self.terms.items())

    def __repr__(self):
        return f"{type(self).__name__}({self.level}: {self})"

    def to_json(self, with_level: bool = True) -> dict:
        out = {"terms": [dict(lab.to_json(), mult=m) for lab, m in self.terms.items()]}
        if with_level:
            out = {"level": self.level.to_json(), **out}
        return out


def gr_add(a: Mapping[int, int], b: Mapping[int, int], k: int = 1) -> dict[int, int]:
    """a + k*b for finitely supported multiplicity vectors, zeros pruned, keys sorted."""
    out = dict(a)
    for i, m in b.items():
        out[i] = out.get(i, 0) + k * m
    return {i: m for i, m in sorted(out.items()) if m}
