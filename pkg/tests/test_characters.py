"""Character layer: roots of unity, the sigma invariant, the epsilon
formulas, and the quadratic-form invariant."""

from fractions import Fraction

import pytest

from sl2chars.characters import (
    ROOT_MINUS_ONE,
    ROOT_ONE,
    UnityRoot,
    char_eval,
    character_spec,
    characters_equal,
    eps4prime,
    eps4prime_decompose,
    eps_n,
    invariant_I,
    s4,
    sigma,
    zmod_character_group,
)
from sl2chars.matrices import (
    Mat2,
    enumerate_sl2,
    gen_S,
    gen_T,
    identity,
    mat2,
    quadratic_form,
)
from sl2chars.rings import ALPHA, DUAL_F2, RingError, Zmod, element, one


def test_unity_root_arithmetic():
    i = UnityRoot.of(1, 4)
    assert i * i == ROOT_MINUS_ONE
    assert i**4 == ROOT_ONE
    assert i.inv() == UnityRoot.of(3, 4)
    assert i.order() == 4
    assert UnityRoot.of(2, 6) == UnityRoot.of(1, 3)
    assert UnityRoot.of(5, 4).exponent == Fraction(1, 4)


def test_unity_root_str():
    assert str(ROOT_ONE) == "0/1 (1)"
    assert str(ROOT_MINUS_ONE) == "1/2 (-1)"
    assert str(UnityRoot.of(1, 4)) == "1/4 (i)"
    assert str(UnityRoot.of(1, 3)) == "1/3"


def test_sigma_examples():
    assert sigma(gen_T(one(Zmod(4)))) == 3     # c not a unit, -b = -1 = 3
    assert sigma(gen_S(Zmod(4))) == 1          # tr^2 = 0 != 4
    assert sigma(gen_T(one(Zmod(2)))) == 1
    assert sigma(identity(Zmod(4))) == 0
    assert sigma(-identity(Zmod(4))) == 0
    assert sigma(mat2(Zmod(4), 3, 2, 2, 3)) == 0  # = 1 mod 2


def test_s4_examples():
    assert s4(-identity(Zmod(4))) == -1  # X = [[1,0],[0,1]], a+b+c = 1
    assert s4(gen_T(one(Zmod(4)))) == 1  # not = 1 mod 2
    assert s4(mat2(Zmod(4), 3, 2, 2, 3)) == -1  # X = [[1,1],[1,1]]
    with pytest.raises(RingError):
        s4(identity(Zmod(2)))


def test_generator_values():
    assert eps_n(gen_T(one(Zmod(2)))) == ROOT_MINUS_ONE
    assert eps_n(gen_T(one(Zmod(3)))) == UnityRoot.of(1, 3)
    assert eps_n(gen_T(one(Zmod(4)))) == UnityRoot.of(1, 4)
    for n in (2, 3, 4):
        r = Zmod(n)
        t, s = eps_n(gen_T(one(r))), eps_n(gen_S(r))
        assert s == t.inv() ** 3
        assert s**4 == ROOT_ONE


def test_eps_is_homomorphism():
    for n in (2, 3, 4):
        g = enumerate_sl2(Zmod(n))
        for a in g:
            for b in g:
                assert eps_n(a * b) == eps_n(a) * eps_n(b)


def test_eps4prime_decompose():
    m = gen_T(ALPHA)  # [[1, a], [0, 1]]
    a0, b = eps4prime_decompose(m)
    assert a0 == identity(DUAL_F2)
    assert (b.a.value, b.b.value, b.c.value, b.d.value) == (0, 1, 0, 0)
    assert eps4prime(m) == ROOT_MINUS_ONE
    assert eps4prime(identity(DUAL_F2)) == ROOT_ONE
    # decomposition reassembles the matrix: A = A0 (1 + alpha B)
    for m in enumerate_sl2(DUAL_F2):
        a0, b = eps4prime_decompose(m)
        rest = Mat2(one(DUAL_F2) + ALPHA * element(DUAL_F2, b.a.value),
                    ALPHA * element(DUAL_F2, b.b.value),
                    ALPHA * element(DUAL_F2, b.c.value),
                    one(DUAL_F2) + ALPHA * element(DUAL_F2, b.d.value))
        assert a0 * rest == m
        assert b.trace().value == 0


def test_eps4prime_is_homomorphism():
    g = enumerate_sl2(DUAL_F2)
    for a in g:
        for b in g:
            assert eps4prime(a * b) == eps4prime(a) * eps4prime(b)


def test_invariant_I_examples():
    f = quadratic_form(gen_T(one(Zmod(4))))
    assert invariant_I(f) == 3
    assert invariant_I(quadratic_form(gen_S(Zmod(4)))) == 1
    assert invariant_I(quadratic_form(identity(Zmod(4)))) == 0


def test_sigma_equals_invariant_of_form():
    for n in (2, 3, 4):
        for m in enumerate_sl2(Zmod(n)):
            assert sigma(m) == invariant_I(quadratic_form(m))


def test_character_spec_reduction():
    spec = character_spec(Zmod(12), "eps4")
    m = gen_T(one(Zmod(12)))
    assert char_eval(spec, m) == UnityRoot.of(1, 4)
    spec3 = character_spec(Zmod(12), "eps3")
    assert char_eval(spec3, m) == UnityRoot.of(1, 3)
    triv = character_spec(Zmod(12), "trivial")
    assert char_eval(triv, m) == ROOT_ONE
    with pytest.raises(RingError):
        character_spec(Zmod(5), "eps2")


def test_zmod_character_group_shapes():
    assert [s.kind for s in zmod_character_group(2)] == ["eps2"]
    assert [s.kind for s in zmod_character_group(3)] == ["eps3"]
    assert [s.kind for s in zmod_character_group(4)] == ["eps4"]
    assert [s.kind for s in zmod_character_group(5)] == []
    assert [s.kind for s in zmod_character_group(6)] == ["eps3", "eps2"]
    assert [s.kind for s in zmod_character_group(12)] == ["eps3", "eps4"]


def test_characters_equal():
    dom = enumerate_sl2(Zmod(12))
    a = character_spec(Zmod(12), "eps3")
    b = character_spec(Zmod(12), "eps3")
    assert characters_equal(a, b, dom)
    assert not characters_equal(a, character_spec(Zmod(12), "eps4"), dom)
