import itertools

import pytest
from hypothesis import given, strategies as st

from fusionkl.cyclotomic import cyc_root
from fusionkl.errors import (
    InternalNonNegativity,
    InvalidArgument,
    MixedLevels,
    NotProjective,
    UnsupportedLabel,
    UnsupportedPair,
)
from fusionkl.klcat import (
    KLLabel,
    KLObject,
    build,
    canonical_labels,
    canonicalize,
    composition_factors,
    contragredient,
    hom_dim_from_proj,
    in_tensor_ideal,
    is_logarithmic,
    is_projective,
    loewy,
    tensor,
    tensor_projective,
    tensor_simple_small,
    tensor_V2,
    twist_scalar,
    verma_flag,
)
from fusionkl.level import BraidingVariant, Level

L3 = Level(3, 1)


def obj(lv, *pieces):
    return build(lv, pieces)


def lab(kind, r, lv=L3):
    return canonicalize(kind, r, lv)


def test_canonicalize_examples():
    assert lab("Proj", 2) == KLLabel("Verma", 2, L3)
    assert lab("Verma", 3) == KLLabel("Simple", 3, L3)
    assert lab("CoVerma", 6) == KLLabel("Simple", 6, L3)
    assert lab("Proj", 4) == KLLabel("Proj", 4, L3)
    with pytest.raises(InvalidArgument):
        lab("Proj", 0)
    with pytest.raises(InvalidArgument):
        lab("Weird", 2)


def test_composition_factors_examples():
    assert composition_factors(lab("Verma", 4)) == {4: 1, 8: 1}
    assert composition_factors(lab("Proj", 4)) == {4: 2, 2: 1, 8: 1}
    assert composition_factors(lab("Simple", 9)) == {9: 1}


def test_loewy_examples():
    # the middle layer of P_{np+r} is {np - r, (n+2)p - r}
    assert loewy(lab("Proj", 5)) == [[5], [1, 7], [5]]
    assert loewy(lab("Verma", 2)) == [[2], [4]]
    assert loewy(lab("CoVerma", 2)) == [[4], [2]]
    assert loewy(lab("Simple", 6)) == [[6]]


@pytest.mark.parametrize("p", [2, 3, 4, 5, 7])
def test_loewy_concatenation_is_factors(p):
    lv = Level(p, 1)
    for x in canonical_labels(lv, 60):
        flat = {}
        for layer in loewy(x):
            for r in layer:
                flat[r] = flat.get(r, 0) + 1
        assert flat == composition_factors(x)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_contragredient_involution_and_factors(p):
    lv = Level(p, 1)
    for x in canonical_labels(lv, 40):
        o = KLObject.of(x, 2)
        d = contragredient(o)
        assert contragredient(d) == o
        (y, _), = d
        assert composition_factors(y) == composition_factors(x)
    assert contragredient(obj(L3, ("Proj", 4, 1))) == obj(L3, ("Proj", 4, 1))
    assert contragredient(obj(L3, ("Verma", 2, 1))) == obj(L3, ("CoVerma", 2, 1))


def test_logarithmic_and_projective_flags():
    assert is_logarithmic(lab("Proj", 4))
    assert not is_logarithmic(lab("Verma", 2))
    assert not is_logarithmic(lab("Simple", 6))
    assert is_projective(lab("Simple", 6)) and is_projective(lab("Verma", 2))
    assert not is_projective(lab("Simple", 2)) and not is_projective(lab("CoVerma", 4))


def test_twist_scalar_examples():
    assert twist_scalar(lab("Verma", 1)) == (cyc_root(L3, 0), False)
    i = cyc_root(L3, 3)
    assert twist_scalar(lab("Verma", 2))[0] == i
    assert twist_scalar(lab("Verma", 2), BraidingVariant("standard", "-"))[0] == -i
    assert twist_scalar(lab("Verma", 2), BraidingVariant("reverse", "+"))[0] == -i
    assert twist_scalar(lab("Proj", 4)) == (cyc_root(L3, 15), True)


def test_tensor_v2_examples():
    assert tensor_V2(obj(L3, ("Verma", 2, 1))) == obj(L3, ("Verma", 1, 1), ("Simple", 3, 1))
    assert tensor_V2(obj(L3, ("Simple", 3, 1))) == obj(L3, ("Proj", 4, 1))
    assert tensor_V2(obj(L3, ("Simple", 2, 1))) == obj(L3, ("Simple", 1, 1))
    with pytest.raises(UnsupportedLabel):
        tensor_V2(obj(L3, ("CoVerma", 2, 1)))


def test_tensor_v2_p2_projectives():
    lv = Level(2, 1)
    assert tensor_V2(obj(lv, ("Proj", 3, 1))) == obj(lv, ("Proj", 2, 2), ("Proj", 4, 1))
    assert tensor_V2(obj(lv, ("Proj", 5, 1))) == obj(lv, ("Proj", 2, 1), ("Proj", 4, 2), ("Proj", 6, 1))


def test_tensor_simple_small():
    lv5 = Level(5, 1)
    assert tensor_simple_small(lv5, 2, 4) == obj(lv5, ("Simple", 3, 1))
    assert tensor_simple_small(L3, 1, 7).is_zero()
    assert tensor_simple_small(L3, 1, 2) == obj(L3, ("Simple", 2, 1))
    with pytest.raises(InvalidArgument):
        tensor_simple_small(L3, 3, 1)


def test_verma_flag_examples():
    assert verma_flag(lab("Proj", 4)) == {2: 1, 4: 1}
    assert verma_flag(lab("Verma", 2)) == {2: 1}
    assert verma_flag(lab("Simple", 6)) == {6: 1}
    with pytest.raises(NotProjective):
        verma_flag(lab("Simple", 4))


def test_tensor_projective_examples():
    p4 = obj(L3, ("Proj", 4, 1))
    assert tensor_projective(obj(L3, ("Proj", 1, 1)), p4) == p4
    assert tensor_projective(obj(L3, ("Verma", 2, 1)), obj(L3, ("Simple", 3, 1))) == p4
    assert tensor_projective(p4, p4) == obj(L3, ("Proj", 7, 1), ("Proj", 5, 2), ("Simple", 3, 4))


def test_greedy_detects_non_flags():
    from fusionkl.klcat import greedy_projective

    # V_2 alone at p = 3 is fine, but {4: 1} would require subtracting V_2
    with pytest.raises(InternalNonNegativity):
        greedy_projective(L3, {4: 1})


def test_tensor_dispatch():
    assert tensor(obj(L3, ("Verma", 1, 1)), obj(L3, ("CoVerma", 5, 2))) == obj(L3, ("CoVerma", 5, 2))
    assert tensor(obj(L3, ("Verma", 2, 1)), obj(L3, ("Verma", 5, 1))) == obj(L3, ("Verma", 4, 1), ("Simple", 6, 1))
    with pytest.raises(UnsupportedPair):
        tensor(obj(L3, ("Simple", 2, 1)), obj(L3, ("Verma", 4, 1)))
    with pytest.raises(MixedLevels):
        tensor(obj(L3, ("Verma", 2, 1)), obj(Level(3, 2), ("Verma", 2, 1)))


def _supported_labels(lv, bound):
    return [x for x in canonical_labels(lv, bound)]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_tensor_commutative(p):
    lv = Level(p, 1)
    labels = _supported_labels(lv, 14)
    for x, y in itertools.product(labels, repeat=2):
        try:
            a = tensor(KLObject.of(x), KLObject.of(y))
        except (UnsupportedPair, UnsupportedLabel):
            with pytest.raises((UnsupportedPair, UnsupportedLabel)):
                tensor(KLObject.of(y), KLObject.of(x))
            continue
        assert a == tensor(KLObject.of(y), KLObject.of(x))


@pytest.mark.parametrize("p", [2, 3, 4])
def test_tensor_projective_associative(p):
    lv = Level(p, 1)
    projs = [KLObject.of(x) for x in canonical_labels(lv, 12) if is_projective(x)]
    for a, b, c in itertools.product(projs, repeat=3):
        assert tensor_projective(tensor_projective(a, b), c) == tensor_projective(a, tensor_projective(b, c))


@given(st.sampled_from([2, 3, 4, 5]), st.integers(1, 30), st.integers(1, 30))
def test_projective_tensor_is_projective_and_multiplies_flags(p, a, b):
    lv = Level(p, 1)
    x, y = obj(lv, ("Proj", a, 1)), obj(lv, ("Proj", b, 1))
    out = tensor_projective(x, y)
    assert all(is_projective(lab) for lab, _ in out)
    # total dimension of the top spaces is multiplicative on Verma flags
    from fusionkl.klcat import object_flag

    size = lambda f: sum(r * m for r, m in f.items())
    assert size(object_flag(out)) == size(object_flag(x)) * size(object_flag(y))


def test_hom_examples():
    assert hom_dim_from_proj(lab("Proj", 4), obj(L3, ("Proj", 4, 1))) == 2
    assert hom_dim_from_proj(lab("Verma", 1), obj(L3, ("Proj", 5, 1))) == 1
    assert hom_dim_from_proj(lab("Verma", 2), obj(L3, ("Simple", 6, 1))) == 0
    with pytest.raises(NotProjective):
        hom_dim_from_proj(lab("CoVerma", 2), obj(L3, ("Simple", 6, 1)))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_hom_symmetric_between_self_dual_projectives(p):
    lv = Level(p, 1)
    # P_r for r > p and P_np are self-contragredient, so Hom(P, Q) and Hom(Q, P) agree
    selfdual = [x for x in canonical_labels(lv, 40) if x.kind == "Proj" or (x.kind == "Simple" and x.r % p == 0)]
    for x, y in itertools.product(selfdual, repeat=2):
        assert hom_dim_from_proj(x, KLObject.of(y)) == hom_dim_from_proj(y, KLObject.of(x))


def test_in_tensor_ideal():
    assert in_tensor_ideal(obj(L3, ("Simple", 1, 1), ("Simple", 2, 2)))
    assert not in_tensor_ideal(obj(L3, ("Simple", 3, 1)))
    assert not in_tensor_ideal(obj(L3, ("Verma", 2, 1)))
    assert in_tensor_ideal(KLObject.zero(L3))


def test_json_round_trip():
    x = obj(L3, ("Proj", 4, 2), ("CoVerma", 5, 1), ("Simple", 1, 3))
    data = x.to_json()
    assert data["level"] == {"p": 3, "q": 1}
    assert KLObject.from_json(data) == x
    assert KLObject.from_json(x.to_json(False), L3) == x
    with pytest.raises(MixedLevels):
        KLObject.from_json(data, Level(3, 2))
    with pytest.raises(InvalidArgument):
        KLObject.from_json({"terms": [{"kind": "Proj", "r": 4, "mult": 0}]}, L3)


def test_negative_multiplicity_rejected():
    with pytest.raises(InternalNonNegativity):
        KLObject(L3, {lab("Proj", 4): -1})
