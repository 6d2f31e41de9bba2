"""Quantum side: simples, Weyl modules, tiltings and projective covers of C(zeta, sl2).

Labels use highest weights lambda >= 0 (so T_1 is the two-dimensional standard
object X).  A weight is written lambda = l*p + m with 0 <= m <= p-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .errors import (
    InternalNonNegativity,
    InvalidArgument,
    MixedLevels,
    NotTilting,
    UnsupportedHom,
)
from .formal import FormalSum, gr_add
from .level import Level

QKINDS = ("SimpleQ", "WeylQ", "TiltQ", "ProjQ")
_KIND_ORDER = {k: i for i, k in enumerate(QKINDS)}
_SHORT = {"SimpleQ": "Lq", "WeylQ": "Wq", "TiltQ": "T", "ProjQ": "Pq"}


@dataclass(frozen=True)
class QLabel:
    kind: str
    lam: int
    level: Level

    def sort_key(self):
        return (self.lam, _KIND_ORDER[self.kind])

    def __str__(self):
        return _SHORT[self.kind] + str(self.lam)

    def to_json(self) -> dict:
        return {"kind": self.kind, "lambda": self.lam}


def _is_steinberg_type(lam: int, p: int) -> bool:
    return lam % p == p - 1


def q_canonicalize(kind: str, lam: int, lv: Level) -> QLabel:
    if kind not in QKINDS:
        raise InvalidArgument(f"unknown quantum label kind {kind!r}")
    if lam < 0:
        raise InvalidArgument(f"weight {lam} must be >= 0")
    p = lv.p
    small_or_st = lam <= p - 1 or _is_steinberg_type(lam, p)
    if kind == "TiltQ":
        if small_or_st:
            return QLabel("SimpleQ", lam, lv)
        l, m = divmod(lam, p)
        return QLabel("ProjQ", l * p - m - 2, lv)
    if kind == "ProjQ":
        if _is_steinberg_type(lam, p):
            return QLabel("SimpleQ", lam, lv)
        return QLabel("ProjQ", lam, lv)
    if kind == "WeylQ" and small_or_st:
        return QLabel("SimpleQ", lam, lv)
    return QLabel(kind, lam, lv)


def tilt(lam: int, lv: Level) -> QLabel:
    return q_canonicalize("TiltQ", lam, lv)


def tilting_weight(x: QLabel) -> int | None:
    """Highest weight of x as an indecomposable tilting module, or None if x is not tilting."""
    p = x.level.p
    if x.kind == "SimpleQ":
        return x.lam if (x.lam <= p - 1 or _is_steinberg_type(x.lam, p)) else None
    if x.kind == "ProjQ":
        l = x.lam // p + 1
        return 2 * l * p - x.lam - 2
    if x.kind == "TiltQ":
        return x.lam
    return None


def is_tilting(x: QLabel) -> bool:
    return tilting_weight(x) is not None


def is_q_projective(x: QLabel) -> bool:
    p = x.level.p
    if x.kind == "ProjQ":
        return True
    return x.kind == "SimpleQ" and _is_steinberg_type(x.lam, p)


class QObject(FormalSum):
    __slots__ = ()

    @classmethod
    def from_json(cls, data: dict, level: Level | None = None) -> "QObject":
        if "level" in data:
            lv = Level(int(data["level"]["p"]), int(data["level"]["q"]))
            if level is not None and lv != level:
                raise MixedLevels(f"payload level {lv} differs from {level}")
        elif level is not None:
            lv = level
        else:
            raise InvalidArgument("object JSON needs a level")
        out = {}
        for t in data.get("terms", []):
            lab = q_canonicalize(t["kind"], int(t["lambda"]), lv)
            m = int(t.get("mult", 1))
            if m < 1:
                raise InvalidArgument(f"multiplicity must be >= 1, got {m}")
            out[lab] = out.get(lab, 0) + m
        return cls(lv, out)


def tiltings(lv: Level, pieces) -> QObject:
    """Sum of mult*T_lambda over (lambda, mult) pairs; T_lambda = 0 for lambda < 0."""
    out: dict[QLabel, int] = {}
    for lam, m in pieces:
        if lam < 0 or m == 0:
            continue
        lab = tilt(lam, lv)
        out[lab] = out.get(lab, 0) + m
    return QObject(lv, out)


def q_composition_factors(x: QLabel) -> dict[int, int]:
    p = x.level.p
    if x.kind == "SimpleQ":
        return {x.lam: 1}
    if x.kind == "WeylQ":
        l, m = divmod(x.lam, p)
        return gr_add({x.lam: 1}, {l * p - m - 2: 1})
    lam = tilting_weight(x)
    l, m = divmod(lam, p)
    if l == 1:
        return gr_add({p - m - 2: 2}, {p + m: 1})
    return gr_add(gr_add({l * p - m - 2: 2}, {lam: 1}), {(l - 2) * p + m: 1})


def q_object_factors(x: QObject) -> dict[int, int]:
    out: dict[int, int] = {}
    for lab, k in x:
        out = gr_add(out, q_composition_factors(lab), k)
    return out


def weyl_flag(x: QLabel) -> dict[int, int]:
    lam = tilting_weight(x)
    if lam is None:
        raise NotTilting(f"{x} is not a tilting module")
    p = x.level.p
    _check_consistency(p)
    if lam <= p - 1 or _is_steinberg_type(lam, p):
        return {lam: 1}
    l, m = divmod(lam, p)
    return gr_add({lam: 1}, {l * p - m - 2: 1})


@lru_cache(maxsize=None)
def _check_consistency(p: int, bound: int = 200) -> bool:
    """[T_lambda] must equal the sum of its Weyl-flag classes for every lambda <= bound."""
    lv = Level(p, 1)
    for lam in range(bound + 1):
        t = tilt(lam, lv)
        l, m = divmod(lam, p)
        if lam <= p - 1 or _is_steinberg_type(lam, p):
            flag = {lam: 1}
        else:
            flag = gr_add({lam: 1}, {l * p - m - 2: 1})
        weyl_sum: dict[int, int] = {}
        for mu, k in flag.items():
            weyl_sum = gr_add(weyl_sum, q_composition_factors(q_canonicalize("WeylQ", mu, lv)), k)
        if weyl_sum != q_composition_factors(t):
            raise InternalNonNegativity(f"Weyl flag of T{lam} at p={p} is inconsistent")
    return True


def x_tensor_tilting(lv: Level, lam: int) -> QObject:
    """Closed form for X (x) T_lambda."""
    if lam < 0:
        raise InvalidArgument(f"weight {lam} must be >= 0")
    p = lv.p
    l, m = divmod(lam, p)
    if p == 2:
        if m == 0:
            pieces = [(2 * l - 3, 1), (2 * l - 1, 2), (2 * l + 1, 1)]
        else:
            pieces = [(2 * l + 2, 1)]
    elif m == 0:
        pieces = [(l * p - 1, 2), (l * p + 1, 1)]
    elif m <= p - 3:
        pieces = [(lam - 1, 1), (lam + 1, 1)]
    elif m == p - 2:
        pieces = [((l - 1) * p - 1, 1), ((l + 1) * p - 3, 1), ((l + 1) * p - 1, 1)]
    else:
        pieces = [((l + 1) * p, 1)]
    return tiltings(lv, pieces)


def weyl_clebsch_gordan(a: int, b: int) -> range:
    return range(abs(a - b), a + b + 1, 2)


def greedy_tilting(lv: Level, flag: Mapping[int, int]) -> QObject:
    work = {c: k for c, k in flag.items() if k}
    out: dict[QLabel, int] = {}
    while work:
        c = max(work)
        k = work[c]
        if k < 0:
            raise InternalNonNegativity(f"coefficient of Weyl module {c} became {k}")
        lab = tilt(c, lv)
        out[lab] = out.get(lab, 0) + k
        for d, j in weyl_flag(lab).items():
            work[d] = work.get(d, 0) - k * j
            if work[d] == 0:
                del work[d]
    return QObject(lv, out)


def object_weyl_flag(x: QObject) -> dict[int, int]:
    out: dict[int, int] = {}
    for lab, k in x:
        out = gr_add(out, weyl_flag(lab), k)
    return out


def tilt_tensor(a: QObject, b: QObject) -> QObject:
    if a.level != b.level:
        raise MixedLevels("tensor factors at different levels")
    fa, fb = object_weyl_flag(a), object_weyl_flag(b)
    prod: dict[int, int] = {}
    for x, j in fa.items():
        for y, k in fb.items():
            for c in weyl_clebsch_gordan(x, y):
                prod[c] = prod.get(c, 0) + j * k
    return greedy_tilting(a.level, prod)


def q_hom_dim(a: QLabel, b: QObject) -> int:
    """dim Hom(a, b) for an indecomposable tilting a, where the known Hom tables determine it."""
    p = a.level.p
    if is_q_projective(a):
        # projective cover of its head: count the head in b
        return q_object_factors(b).get(a.lam, 0)
    lam = tilting_weight(a)
    if lam is None or lam > p - 2:
        raise UnsupportedHom(f"no Hom table entry with source {a}")
    total = 0
    for lab, k in b:
        mu = tilting_weight(lab)
        if mu is None:
            raise UnsupportedHom(f"no Hom table entry for {a} -> {lab}")
        if mu == lam or mu == 2 * p - lam - 2:
            total += k
    return total
