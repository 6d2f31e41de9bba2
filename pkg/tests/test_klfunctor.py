import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from fusionkl.acceptance import random_object
from fusionkl.errors import InvalidArgument, NotTilting
from fusionkl.klcat import KLObject, build, canonicalize, hom_dim_from_proj, in_tensor_ideal, is_projective
from fusionkl.klfunctor import (
    equivalence_dictionary,
    functor_kernel_test,
    functor_object,
    inverse_dictionary,
)
from fusionkl.level import Level
from fusionkl.qgroup import QLabel, QObject, q_canonicalize, q_composition_factors, q_hom_dim, tilt, tilt_tensor

L3 = Level(3, 1)


def test_examples():
    img = functor_object(build(L3, [("Proj", 4, 1)]))
    assert img.tiltingPart == QObject.of(tilt(3, L3))
    assert functor_object(build(L3, [("Simple", 4, 1)])).grPart == {1: 1}
    assert functor_object(build(L3, [("Simple", 2, 1)])).is_zero()
    assert functor_object(build(L3, [("Simple", 6, 1)])).grPart == {5: 1}


def test_tilting_part_only_for_projective_inputs():
    assert functor_object(build(L3, [("Verma", 4, 1)])).tiltingPart is None
    assert functor_object(build(L3, [("Verma", 2, 1), ("Simple", 3, 2)])).tiltingPart is not None


def test_kernel_examples():
    assert functor_kernel_test(build(L3, [("Simple", 1, 2)]))
    assert not functor_kernel_test(build(L3, [("Verma", 2, 1)]))
    assert functor_kernel_test(KLObject.zero(L3))


def test_dictionary():
    assert equivalence_dictionary(L3, 1) == QLabel("SimpleQ", 0, L3)
    assert equivalence_dictionary(L3, 4) == QLabel("ProjQ", 1, L3)
    assert equivalence_dictionary(L3, 6) == QLabel("SimpleQ", 5, L3)
    with pytest.raises(InvalidArgument):
        equivalence_dictionary(L3, 0)
    for p in (2, 3, 5):
        lv = Level(p, 1)
        for r in range(1, 60):
            assert inverse_dictionary(equivalence_dictionary(lv, r)) == canonicalize("Proj", r, lv)
    with pytest.raises(NotTilting):
        inverse_dictionary(QLabel("WeylQ", 4, L3))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_verma_image_is_weyl_class(p):
    lv = Level(p, 1)
    for n in range(11):
        for r in range(1, p):
            idx = n * p + r
            img = functor_object(build(lv, [("Verma", idx, 1)])).grPart
            weyl = q_composition_factors(q_canonicalize("WeylQ", idx - 1, lv))
            assert img == weyl
            co = functor_object(build(lv, [("CoVerma", idx, 1)])).grPart
            assert co == weyl


@pytest.mark.parametrize("p", [2, 3, 5])
def test_monoidal_on_projectives(p):
    lv = Level(p, 1)
    from fusionkl.klcat import tensor_projective

    for a, b in itertools.product(range(1, 21), repeat=2):
        x, y = build(lv, [("Proj", a, 1)]), build(lv, [("Proj", b, 1)])
        lhs = functor_object(tensor_projective(x, y)).tiltingPart
        assert lhs == tilt_tensor(functor_object(x).tiltingPart, functor_object(y).tiltingPart)


@pytest.mark.parametrize("p", [2, 3, 4, 5])
def test_hom_preserved(p):
    lv = Level(p, 1)
    for a, b in itertools.product(range(1, 31), repeat=2):
        pa = canonicalize("Proj", a, lv)
        assert is_projective(pa)
        d = hom_dim_from_proj(pa, build(lv, [("Proj", b, 1)]))
        assert d == q_hom_dim(tilt(a - 1, lv), QObject.of(tilt(b - 1, lv)))


@settings(max_examples=200)
@given(st.sampled_from([2, 3, 4, 5, 7]), st.integers(0, 10**6))
def test_kernel_law_random(p, seed):
    lv = Level(p, 1)
    x = random_object(lv, random.Random(seed))
    assert functor_kernel_test(x) == in_tensor_ideal(x) == functor_object(x).is_zero()


def test_json_shape():
    data = functor_object(build(L3, [("Proj", 4, 1)])).to_json()
    assert data == {
        "grPart": [{"lambda": 1, "mult": 2}, {"lambda": 3, "mult": 1}],
        "tiltingPart": [{"kind": "ProjQ", "lambda": 1, "mult": 1}],
    }
