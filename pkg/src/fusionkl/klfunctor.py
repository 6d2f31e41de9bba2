"""The weak Kazhdan-Lusztig functor F from the affine category to quantum sl2.

F sends the index-r projective P_r to the tilting module T_{r-1}.  It is exact,
so on arbitrary objects it is computed in the Grothendieck group from its
values on simple modules.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidArgument, NotTilting
from .formal import gr_add
from .klcat import KLLabel, KLObject, canonicalize, composition_factors, in_tensor_ideal, is_projective
from .level import Level
from .qgroup import QLabel, QObject, q_object_factors, tilt, tilting_weight


@dataclass(frozen=True)
class FunctorImage:
    grPart: dict[int, int] = field(default_factory=dict)
    tiltingPart: QObject | None = None

    def is_zero(self) -> bool:
        return not self.grPart

    def to_json(self) -> dict:
        out = {"grPart": [{"lambda": lam, "mult": m} for lam, m in self.grPart.items()]}
        out["tiltingPart"] = None if self.tiltingPart is None else self.tiltingPart.to_json(False)["terms"]
        return out


def functor_simple(lv: Level, r: int) -> dict[int, int]:
    """Image of the simple module L_r as a quantum Grothendieck vector (empty = 0)."""
    p = lv.p
    n, s = divmod(r, p)
    if r < p:
        return {}
    if s == 0:
        return {r - 1: 1}
    return {n * p - s - 1: 1}


def _label_gr(x: KLLabel) -> dict[int, int]:
    out: dict[int, int] = {}
    for r, m in composition_factors(x).items():
        out = gr_add(out, functor_simple(x.level, r), m)
    return out


def functor_object(x: KLObject) -> FunctorImage:
    lv = x.level
    gr: dict[int, int] = {}
    tilt_terms: dict[QLabel, int] = {}
    all_projective = True
    for lab, m in x:
        gr = gr_add(gr, _label_gr(lab), m)
        if is_projective(lab):
            t = tilt(lab.r - 1, lv)
            tilt_terms[t] = tilt_terms.get(t, 0) + m
        else:
            all_projective = False
    tilting = QObject(lv, tilt_terms) if all_projective else None
    if tilting is not None and q_object_factors(tilting) != gr:
        raise AssertionError(f"tilting image of {x} disagrees with its Grothendieck image")
    return FunctorImage(gr, tilting)


def functor_kernel_test(x: KLObject) -> bool:
    verdict = in_tensor_ideal(x)
    if verdict != functor_object(x).is_zero():
        raise AssertionError(f"kernel law fails on {x}")
    return verdict


def equivalence_dictionary(lv: Level, r: int) -> QLabel:
    """Tilting partner T_{r-1} of the projective P_r."""
    if r < 1:
        raise InvalidArgument(f"index r={r} must be >= 1")
    return tilt(r - 1, lv)


def inverse_dictionary(x: QLabel) -> KLLabel:
    """Projective partner P_{lambda+1} of the tilting module T_lambda."""
    lam = tilting_weight(x)
    if lam is None:
        raise NotTilting(f"{x} is not a tilting module")
    return canonicalize("Proj", lam + 1, x.level)
