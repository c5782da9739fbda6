"""Ring layer: Z/n, the dual numbers over F2, homomorphisms, CRT."""

import pytest

from sl2chars.rings import (
    ALPHA,
    DUAL_F2,
    RingError,
    UnitSquareCase,
    Zmod,
    classify_unit_square,
    crt_decompose,
    dual_element,
    element,
    enumerate_ring,
    hom_reduce,
    is_local,
    one,
    units,
    zero,
)


def test_zmod_arithmetic():
    r = Zmod(12)
    a = element(r, 7)
    b = element(r, 8)
    assert (a + b).value == 3
    assert (a * b).value == 8
    assert (-a).value == 5
    assert (a - b).value == 11
    assert zero(r) + one(r) == one(r)


def test_zmod_units_and_inverse():
    r = Zmod(4)
    assert element(r, 3).is_unit()
    assert element(r, 3).inv() == element(r, 3)
    assert not element(r, 2).is_unit()
    with pytest.raises(RingError):
        element(r, 2).inv()
    assert [u.value for u in units(Zmod(8))] == [1, 3, 5, 7]


def test_zmod_rejects_bad_modulus():
    with pytest.raises(RingError):
        Zmod(1)
    with pytest.raises(RingError):
        Zmod(0)


def test_dual_numbers():
    assert ALPHA * ALPHA == zero(DUAL_F2)
    assert (one(DUAL_F2) + ALPHA).is_unit()
    u = one(DUAL_F2) + ALPHA
    assert u.inv() == u  # (1+a)^2 = 1
    assert not ALPHA.is_unit()
    assert len(enumerate_ring(DUAL_F2)) == 4
    assert len(units(DUAL_F2)) == 2
    assert str(dual_element(1, 1)) == "1+a"


def test_mixed_ring_operations_rejected():
    with pytest.raises(RingError):
        element(Zmod(4), 1) + element(Zmod(3), 1)


def test_hom_reduce():
    h = hom_reduce(Zmod(12), Zmod(4))
    assert h(element(Zmod(12), 7)) == element(Zmod(4), 3)
    h2 = hom_reduce(DUAL_F2, Zmod(2))
    assert h2(ALPHA) == zero(Zmod(2))
    assert h2(one(DUAL_F2) + ALPHA) == one(Zmod(2))
    with pytest.raises(RingError):
        hom_reduce(Zmod(4), Zmod(3))


def test_crt_decompose():
    comps = crt_decompose(6)
    assert [r.n for r, _ in comps] == [2, 3]
    x = element(Zmod(6), 5)
    assert [h(x).value for _, h in comps] == [1, 2]
    comps12 = crt_decompose(12)
    assert [r.n for r, _ in comps12] == [4, 3]
    # the combined map is injective, hence an isomorphism by counting
    images = {tuple(h(x).value for _, h in comps12)
              for x in enumerate_ring(Zmod(12))}
    assert len(images) == 12


def test_is_local():
    assert is_local(Zmod(8)) and is_local(Zmod(9)) and is_local(DUAL_F2)
    assert not is_local(Zmod(6))


def test_classify_unit_square():
    assert classify_unit_square(Zmod(2)).case == UnitSquareCase.CASE1_F2
    assert classify_unit_square(Zmod(3)).case == UnitSquareCase.CASE1_F3
    assert classify_unit_square(Zmod(4)).case == UnitSquareCase.CASE2_Z2N
    assert classify_unit_square(Zmod(8)).case == UnitSquareCase.CASE2_Z2N
    assert classify_unit_square(DUAL_F2).case == UnitSquareCase.CASE3_DUAL
    for n in (5, 7, 9, 16, 25):
        assert classify_unit_square(Zmod(n)).case == UnitSquareCase.NOT_EXPONENT_2
    with pytest.raises(RingError):
        classify_unit_square(Zmod(6))


def test_classification_matches_exhaustion():
    for r in [Zmod(q) for q in (2, 3, 4, 5, 7, 8, 9, 16, 27)] + [DUAL_F2]:
        exp2 = all(u * u == one(r) for u in units(r))
        got = classify_unit_square(r).case != UnitSquareCase.NOT_EXPONENT_2
        assert exp2 == got
