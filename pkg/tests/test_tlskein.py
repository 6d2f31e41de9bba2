import pytest

from fusionkl.cyclotomic import braid_coefficient, cyc_root, loop_value, one, quantum_int
from fusionkl.errors import InvalidArgument, QuantumIntegerZero, StrandMismatch
from fusionkl.level import STANDARD, BraidingVariant, Level
from fusionkl.tlskein import (
    TLDiagram,
    TLElement,
    braid_element,
    braid_pair,
    cap,
    cap_braid_scalar,
    check_braid_relation,
    compose_diagrams,
    cup,
    cup_cap_pairing,
    expected_cap_double_braid,
    generator,
    identity,
    jones_wenzl,
    markov_trace,
    r_compose_i_scalar,
    tl_compose,
    zigzag_holds,
)

from conftest import LEVELS

L3 = Level(3, 1)
L5 = Level(5, 2)


def test_generator_relations():
    lv = L5
    d = loop_value(lv)
    e1 = generator(lv, 2, 1)
    assert tl_compose(e1, e1) == e1.scale(d)
    assert tl_compose(identity(lv, 2), e1) == e1
    f1, f2 = generator(lv, 3, 1), generator(lv, 3, 2)
    assert f1 @ f2 @ f1 == f1
    assert f2 @ f1 @ f2 == f2


def test_far_generators_commute():
    lv = L5
    e1, e3 = generator(lv, 4, 1), generator(lv, 4, 3)
    assert e1 @ e3 == e3 @ e1


def test_pairing_values():
    assert cup_cap_pairing(L3) == -1
    assert cup_cap_pairing(Level(2, 1)).is_zero()
    lv = L5
    z = cyc_root(lv, 2 * lv.q)
    assert cup_cap_pairing(lv) == -z - z.inverse()


@pytest.mark.parametrize("lv", LEVELS)
def test_zigzag(lv):
    assert zigzag_holds(lv)


def test_jw_small_cases():
    lv = L5
    assert jones_wenzl(lv, 1) == identity(lv, 1)
    jw2 = jones_wenzl(lv, 2)
    e1 = generator(lv, 2, 1)
    # with delta = -[2] the idempotent is Id + e/[2]
    assert jw2 == identity(lv, 2) + e1.scale(quantum_int(lv, 2).inverse())
    wrong = identity(lv, 2) - e1.scale(quantum_int(lv, 2).inverse())
    assert wrong @ wrong != wrong
    with pytest.raises(QuantumIntegerZero):
        jones_wenzl(L3, 3)
    with pytest.raises(InvalidArgument):
        jones_wenzl(L3, 0)


@pytest.mark.parametrize("lv", [Level(3, 1), Level(4, 1), Level(5, 2), Level(5, 3), Level(7, 2)])
def test_jw_projector_laws(lv):
    for n in range(1, min(lv.p, 6)):
        jw = jones_wenzl(lv, n)
        assert jw @ jw == jw
        for i in range(1, n):
            e = generator(lv, n, i)
            assert (e @ jw).is_zero() and (jw @ e).is_zero()
        assert markov_trace(jw) == quantum_int(lv, n + 1) * (-1) ** n


def test_markov_trace_examples():
    lv = L5
    d = loop_value(lv)
    assert markov_trace(identity(lv, 1)) == d
    assert markov_trace(generator(lv, 2, 1)) == d
    assert markov_trace(identity(lv, 3)) == d**3


def test_braid_elements():
    lv = L3
    A = braid_coefficient(lv)
    e1 = generator(lv, 2, 1)
    assert braid_element(lv, STANDARD) == identity(lv, 2).scale(A) + e1.scale(A.inverse())
    assert braid_pair(lv, BraidingVariant("reverse", "+")) == (A.inverse(), A)
    assert braid_pair(lv, BraidingVariant("twisted", "-")) == (-A, -A.inverse())


@pytest.mark.parametrize("lv", [Level(2, 1), Level(3, 1), Level(5, 2)])
def test_braid_checks(lv):
    A = braid_coefficient(lv)
    Ai = A.inverse()
    for a, b in [(A, Ai), (-A, -Ai), (Ai, A), (-Ai, -A)]:
        assert check_braid_relation(lv, a, b)
    assert not check_braid_relation(lv, one(lv), one(lv))


def test_braid_relation_alone_is_too_weak():
    from fusionkl.tlskein import braid_relation

    lv = L3
    # a pure scalar satisfies the braid relation but is not a braiding of V2
    assert braid_relation(lv, one(lv), one(lv) * 0)
    assert not check_braid_relation(lv, one(lv), one(lv) * 0)


@pytest.mark.parametrize("lv", [Level(2, 1), Level(3, 1), Level(3, 2), Level(5, 2)])
def test_r_compose_i(lv):
    std = r_compose_i_scalar(lv, STANDARD)
    assert std == -cyc_root(lv, -3 * lv.q)
    assert r_compose_i_scalar(lv, BraidingVariant("reverse", "+")) == std.conjugate()
    assert r_compose_i_scalar(lv, BraidingVariant("twisted", "-")) == -std


@pytest.mark.parametrize("lv", [Level(3, 1), Level(5, 2)])
def test_cap_double_braid(lv):
    for flavor in ("standard", "twisted", "reverse", "twisted-reverse"):
        v = BraidingVariant(flavor, "+")
        a, b = braid_pair(lv, v)
        assert cap_braid_scalar(lv, a, b, 2) == expected_cap_double_braid(lv, v)
    assert expected_cap_double_braid(lv, STANDARD) == cyc_root(lv, -6 * lv.q)


def test_diagram_validation_and_json():
    d = TLDiagram(2, 2, ((0, 3), (1, 2)))
    assert TLDiagram.from_json(d.to_json()) == d
    assert d.to_json() == {"n": 2, "chords": [[0, 3], [1, 2]]}
    with pytest.raises(InvalidArgument):
        TLDiagram(2, 2, ((0, 2), (1, 3)))
    with pytest.raises(InvalidArgument):
        TLDiagram(1, 2, ((0, 1),))
    cupd = TLDiagram(0, 2, ((0, 1),))
    assert TLDiagram.from_json(cupd.to_json()) == cupd


def test_compose_counts_loops():
    capd = TLDiagram(2, 0, ((0, 1),))
    cupd = TLDiagram(0, 2, ((0, 1),))
    d, loops = compose_diagrams(capd, cupd)
    assert loops == 1 and d == TLDiagram(0, 0, ())


def test_shape_mismatch():
    with pytest.raises(StrandMismatch):
        identity(L3, 2) @ identity(L3, 3)
    with pytest.raises(StrandMismatch):
        identity(L3, 2) + identity(L3, 3)
    assert isinstance(cup(L3) @ cap(L3), TLElement)
