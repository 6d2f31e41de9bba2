"""Affine side: labels, module structure and fusion rules of the KL category.

Indices follow the dimension convention: the index-r module has top space the
r-dimensional sl2 irrep.  Every index decomposes as r = n*p + s with 0 <= s < p.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .cyclotomic import CycNumber, cyc_root
from .errors import (
    InternalNonNegativity,
    InvalidArgument,
    MixedLevels,
    NotProjective,
    UnsupportedLabel,
    UnsupportedPair,
)
from .formal import FormalSum, gr_add
from .level import STANDARD, BraidingVariant, Level, parity

KINDS = ("Simple", "Verma", "CoVerma", "Proj")
_KIND_ORDER = {k: i for i, k in enumerate(KINDS)}


@dataclass(frozen=True)
class KLLabel:
    kind: str
    r: int
    level: Level

    def sort_key(self):
        return (self.r, _KIND_ORDER[self.kind])

    def __str__(self):
        return {"Simple": "L", "Verma": "V", "CoVerma": "Vco", "Proj": "P"}[self.kind] + str(self.r)

    def to_json(self) -> dict:
        return {"kind": self.kind, "r": self.r}


def canonicalize(kind: str, r: int, lv: Level) -> KLLabel:
    if kind not in KINDS:
        raise InvalidArgument(f"unknown label kind {kind!r}")
    if r < 1:
        raise InvalidArgument(f"index r={r} must be >= 1")
    p = lv.p
    if r % p == 0:
        # V_np is irreducible, so every kind collapses onto the simple module
        return KLLabel("Simple", r, lv)
    if kind == "Proj" and r < p:
        return KLLabel("Verma", r, lv)
    return KLLabel(kind, r, lv)


class KLObject(FormalSum):
    """Formal direct sum of canonical indecomposables with positive multiplicities."""

    __slots__ = ()

    @classmethod
    def from_json(cls, data: dict, level: Level | None = None) -> "KLObject":
        lv = _payload_level(data, level)
        out = {}
        for t in data.get("terms", []):
            lab = canonicalize(t["kind"], int(t["r"]), lv)
            m = int(t.get("mult", 1))
            if m < 1:
                raise InvalidArgument(f"multiplicity must be >= 1, got {m}")
            out[lab] = out.get(lab, 0) + m
        return cls(lv, out)


def _payload_level(data: dict, level: Level | None) -> Level:
    if "level" in data:
        lv = Level(int(data["level"]["p"]), int(data["level"]["q"]))
        if level is not None and lv != level:
            raise MixedLevels(f"payload level {lv} differs from {level}")
        return lv
    if level is None:
        raise InvalidArgument("object JSON needs a level")
    return level


def build(lv: Level, pieces: Iterable[tuple[str, int, int]]) -> KLObject:
    """Sum of mult*kind(r), dropping r <= 0 (the V_0 = L_0 = P_0 = 0 convention)."""
    out: dict[KLLabel, int] = {}
    for kind, r, m in pieces:
        if r <= 0 or m == 0:
            continue
        lab = canonicalize(kind, r, lv)
        out[lab] = out.get(lab, 0) + m
    return KLObject(lv, out)


def _split(r: int, p: int) -> tuple[int, int]:
    return divmod(r, p)


def _gr(pairs: Iterable[tuple[int, int]]) -> dict[int, int]:
    out: dict[int, int] = {}
    for idx, m in pairs:
        out[idx] = out.get(idx, 0) + m
    return {k: v for k, v in sorted(out.items()) if v}


def composition_factors(x: KLLabel) -> dict[int, int]:
    p = x.level.p
    n, s = _split(x.r, p)
    if x.kind == "Simple":
        return {x.r: 1}
    if x.kind in ("Verma", "CoVerma"):
        return _gr([(x.r, 1), ((n + 2) * p - s, 1)])
    return _gr([(x.r, 2), (n * p - s, 1), ((n + 2) * p - s, 1)])


def object_factors(x: KLObject) -> dict[int, int]:
    out: dict[int, int] = {}
    for lab, m in x:
        out = gr_add(out, composition_factors(lab), m)
    return out


def loewy(x: KLLabel) -> list[list[int]]:
    """Loewy layers from head to socle."""
    p = x.level.p
    n, s = _split(x.r, p)
    if x.kind == "Simple":
        return [[x.r]]
    verma = [[x.r], [(n + 2) * p - s]]
    if x.kind == "Verma":
        return verma
    if x.kind == "CoVerma":
        return verma[::-1]
    return [[x.r], sorted([n * p - s, (n + 2) * p - s]), [x.r]]


def contragredient(x: KLObject) -> KLObject:
    swap = {"Verma": "CoVerma", "CoVerma": "Verma"}
    out = {}
    for lab, m in x:
        new = KLLabel(swap.get(lab.kind, lab.kind), lab.r, lab.level)
        out[new] = out.get(new, 0) + m
    return KLObject(x.level, out)


def is_logarithmic(x: KLLabel) -> bool:
    return x.kind == "Proj" and x.r > x.level.p and x.r % x.level.p != 0


def is_projective(x: KLLabel) -> bool:
    p = x.level.p
    if x.kind == "Proj":
        return True
    if x.kind == "Verma":
        return x.r < p
    if x.kind == "Simple":
        return x.r % p == 0
    return False


def twist_scalar(x: KLLabel, v: BraidingVariant = STANDARD) -> tuple[CycNumber, bool]:
    """Semisimple part of the ribbon twist on an indecomposable, plus the logarithmic flag."""
    lv = x.level
    value = cyc_root(lv, lv.q * (x.r * x.r - 1))
    if v.sign == "-" and parity(x.r - 1):
        value = -value
    if v.is_reverse:
        value = value.conjugate()
    return value, is_logarithmic(x)


def _v2_simple(r: int, lv: Level) -> list[tuple[str, int, int]]:
    p = lv.p
    n, s = _split(r, p)
    if s == 0:
        return [("Proj", r + 1, 1)]
    if s == p - 1:
        return [("Simple", (n + 1) * p - 2, 1)]
    return [("Simple", r - 1, 1), ("Simple", r + 1, 1)]


def _v2_proj(r: int, lv: Level) -> list[tuple[str, int, int]]:
    # r = n*p + s with n >= 1 and 1 <= s <= p-1 (genuinely logarithmic projective)
    p = lv.p
    n, s = _split(r, p)
    if p == 2:
        return [("Proj", 2 * (n - 1), 1), ("Proj", 2 * n, 2), ("Proj", 2 * (n + 1), 1)]
    if s == 1:
        return [("Proj", n * p, 2), ("Proj", n * p + 2, 1)]
    if s == p - 1:
        return [("Proj", (n - 1) * p, 1), ("Proj", (n + 1) * p - 2, 1), ("Proj", (n + 1) * p, 1)]
    return [("Proj", r - 1, 1), ("Proj", r + 1, 1)]


def tensor_v2_label(x: KLLabel) -> KLObject:
    lv = x.level
    if x.kind == "CoVerma":
        raise UnsupportedLabel(f"no fusion rule for V2 with the contragredient Verma {x}")
    if x.kind == "Simple":
        pieces = _v2_simple(x.r, lv)
    elif x.kind == "Verma":
        pieces = [("Verma", x.r - 1, 1), ("Verma", x.r + 1, 1)]
    else:
        pieces = _v2_proj(x.r, lv)
    return build(lv, pieces)


def tensor_V2(x: KLObject) -> KLObject:
    out = KLObject.zero(x.level)
    for lab, m in x:
        out = out + tensor_v2_label(lab).scaled(m)
    return out


def tensor_simple_small(lv: Level, r: int, r2: int) -> KLObject:
    p = lv.p
    if not 1 <= r <= p - 1:
        raise InvalidArgument(f"first index {r} must lie in [1, {p - 1}]")
    if r2 < 1:
        raise InvalidArgument(f"index {r2} must be >= 1")
    if r2 >= p:
        return KLObject.zero(lv)
    top = min(r + r2 - 1, 2 * p - r - r2 - 1)
    return build(lv, [("Simple", c, 1) for c in range(abs(r - r2) + 1, top + 1, 2)])


def verma_flag(x: KLLabel) -> dict[int, int]:
    if not is_projective(x):
        raise NotProjective(f"{x} is not projective")
    p = x.level.p
    if x.kind == "Proj":
        n, s = _split(x.r, p)
        return _gr([(n * p - s, 1), (x.r, 1)])
    return {x.r: 1}


def clebsch_gordan(a: int, b: int) -> range:
    """Dimensions in V_a (x) V_b for sl2: |a-b|+1, ..., a+b-1 in steps of 2."""
    return range(abs(a - b) + 1, a + b, 2)


def flag_product(fa: Mapping[int, int], fb: Mapping[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for a, ma in fa.items():
        for b, mb in fb.items():
            for c in clebsch_gordan(a, b):
                out[c] = out.get(c, 0) + ma * mb
    return out


def object_flag(x: KLObject) -> dict[int, int]:
    out: dict[int, int] = {}
    for lab, m in x:
        out = gr_add(out, verma_flag(lab), m)
    return out


def greedy_projective(lv: Level, flag: Mapping[int, int]) -> KLObject:
    """Split a Verma-flag character into indecomposable projectives, top index first."""
    work = {c: m for c, m in flag.items() if m}
    out: dict[KLLabel, int] = {}
    while work:
        c = max(work)
        m = work[c]
        if m < 0:
            raise InternalNonNegativity(f"coefficient of V{c} became {m}")
        lab = canonicalize("Proj", c, lv)
        out[lab] = out.get(lab, 0) + m
        for d, k in verma_flag(lab).items():
            work[d] = work.get(d, 0) - m * k
            if work[d] == 0:
                del work[d]
    return KLObject(lv, out)


def tensor_projective(a: KLObject, b: KLObject) -> KLObject:
    if a.level != b.level:
        raise MixedLevels("tensor factors at different levels")
    return greedy_projective(a.level, flag_product(object_flag(a), object_flag(b)))


def _is_unit(x: KLLabel) -> bool:
    return x.r == 1 and x.kind == "Verma"


def _is_v2(x: KLLabel) -> bool:
    # at p = 2 the index-2 Verma module is the simple L_2
    return x.r == 2 and x.kind == ("Simple" if x.level.p == 2 else "Verma")


def _pair(x: KLLabel, y: KLLabel) -> KLObject | None:
    if _is_unit(x):
        return KLObject.of(y)
    if _is_v2(x) and y.kind != "CoVerma":
        return tensor_v2_label(y)
    p = x.level.p
    if x.kind == "Simple" and x.r < p and y.kind == "Simple":
        return tensor_simple_small(x.level, x.r, y.r)
    if is_projective(x) and is_projective(y):
        return tensor_projective(KLObject.of(x), KLObject.of(y))
    return None


def tensor_labels(x: KLLabel, y: KLLabel) -> KLObject:
    res = _pair(x, y)
    if res is None:
        res = _pair(y, x)
    if res is None:
        raise UnsupportedPair(f"no closed-form rule for {x} (x) {y}")
    return res


def tensor(a: KLObject, b: KLObject) -> KLObject:
    if a.level != b.level:
        raise MixedLevels("tensor factors at different levels")
    out = KLObject.zero(a.level)
    for x, m in a:
        for y, k in b:
            out = out + tensor_labels(x, y).scaled(m * k)
    return out


def head(x: KLLabel) -> int:
    if not is_projective(x):
        raise NotProjective(f"{x} is not projective")
    return x.r


def hom_dim_from_proj(a: KLLabel, w: KLObject) -> int:
    """dim Hom(P, W) for an indecomposable projective P: the multiplicity [W : head(P)]."""
    return object_factors(w).get(head(a), 0)


def in_tensor_ideal(x: KLObject) -> bool:
    return all(lab.kind == "Simple" and lab.r < x.level.p for lab, _ in x)


def canonical_labels(lv: Level, max_index: int) -> list[KLLabel]:
    """Every distinct canonical label with index <= max_index."""
    seen = []
    for r in range(1, max_index + 1):
        for kind in KINDS:
            lab = canonicalize(kind, r, lv)
            if lab.kind == kind:
                seen.append(lab)
    return seen
