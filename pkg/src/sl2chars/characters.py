"""Explicit linear characters of SL2 over Z/N (N = 2, 3, 4) and over
the dual numbers F2[t]/(t^2).

Character values are roots of unity represented exactly by their
rational exponents mod 1, so equality tests are exact.  The eps_N
formulas are driven by the invariant sigma_N; the dual-number character
eps4' is driven by the unique decomposition A = A0 (1 + alpha B).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .matrices import Mat2, QuadForm, identity, map_entries
from .rings import (
    DUAL_F2,
    DualF2,
    Ring,
    RingError,
    RingHom,
    Zmod,
    element,
    hom_reduce,
)


@dataclass(frozen=True)
class UnityRoot:
    """The root of unity e^(2*pi*i*q) for a reduced rational 0 <= q < 1.

    The group law is addition of exponents mod 1.
    """

    exponent: Fraction

    @staticmethod
    def of(num: int | Fraction, den: int = 1) -> "UnityRoot":
        return UnityRoot(Fraction(num, den) % 1)

    def __mul__(self, other: "UnityRoot") -> "UnityRoot":
        return UnityRoot((self.exponent + other.exponent) % 1)

    def __pow__(self, k: int) -> "UnityRoot":
        return UnityRoot((self.exponent * k) % 1)

    def inv(self) -> "UnityRoot":
        return UnityRoot((-self.exponent) % 1)

    def order(self) -> int:
        return self.exponent.denominator

    def symbol(self) -> str | None:
        """Symbolic value when fourth root of unity, else None."""
        return {
            Fraction(0): "1",
            Fraction(1, 2): "-1",
            Fraction(1, 4): "i",
            Fraction(3, 4): "-i",
        }.get(self.exponent)

    def __str__(self) -> str:
        q = self.exponent
        s = f"{q.numerator}/{q.denominator}"
        sym = self.symbol()
        return f"{s} ({sym})" if sym else s


ROOT_ONE = UnityRoot(Fraction(0))
ROOT_MINUS_ONE = UnityRoot(Fraction(1, 2))


_SUPPORTED_N = (2, 3, 4)


def _require_zmod(m: Mat2, who: str) -> int:
    if not isinstance(m.ring, Zmod) or m.ring.n not in _SUPPORTED_N:
        raise RingError(f"{who} needs a matrix over Z/2, Z/3 or Z/4, got {m.ring}")
    if not m.is_sl2():
        raise RingError(f"{who} needs determinant 1")
    return m.ring.n


def _is_one_mod_2(m: Mat2) -> bool:
    h = hom_reduce(m.ring, Zmod(2))
    return map_entries(h, m) == identity(Zmod(2))


def sigma(m: Mat2) -> int:
    """The invariant sigma_N of an SL2(Z/N) matrix, N in {2, 3, 4}.

    sigma = 0 when A = +-1, or when N = 4 and A = 1 mod 2;
    sigma = 1 when tr(A)^2 != 4 in the ring;
    otherwise sigma = c when c is a unit, and -b otherwise.
    """
    n = _require_zmod(m, "sigma")
    ring = m.ring
    if m == identity(ring) or m == -identity(ring):
        return 0
    if n == 4 and _is_one_mod_2(m):
        return 0
    t = m.trace()
    if t * t != element(ring, 4):
        return 1
    u = m.c if m.c.is_unit() else -m.b
    return u.value


def s4(m: Mat2) -> int:
    """The sign s in the eps_4 formula: for A = 1 + 2X over Z/4 it is
    (-1)^(a+b+c) with X = [[a, b], [c, *]] over F2, and +1 otherwise."""
    n = _require_zmod(m, "s4")
    if n != 4:
        raise RingError("s4 is defined over Z/4 only")
    if not _is_one_mod_2(m):
        return 1
    # entries of X = (A - 1)/2 are well-defined mod 2
    xa = (m.a.value - 1) // 2 % 2
    xb = m.b.value // 2 % 2
    xc = m.c.value // 2 % 2
    return -1 if (xa + xb + xc) % 2 else 1


def eps_n(m: Mat2) -> UnityRoot:
    """The character eps_N of SL2(Z/N) for N in {2, 3, 4}."""
    n = _require_zmod(m, "eps_n")
    t = m.trace().value
    sg = sigma(m)
    if n == 2:
        return UnityRoot.of((t + 1) * sg, 2)
    if n == 3:
        return UnityRoot.of(t * sg, 3)
    root = UnityRoot.of((t + 1) * sg, 4)
    if s4(m) == -1:
        root = root * ROOT_MINUS_ONE
    return root


def eps4prime_decompose(m: Mat2) -> tuple[Mat2, Mat2]:
    """Write A over the dual numbers uniquely as A0 (1 + alpha B).

    A0 is the alpha-free lift of A mod alpha (an SL2(F2) matrix embedded
    in the dual numbers); B is a trace-0 matrix over Z/2.
    """
    if not isinstance(m.ring, DualF2):
        raise RingError("decomposition lives over the dual numbers")
    if not m.is_sl2():
        raise RingError("decomposition requires determinant 1")
    a0 = Mat2(*(element(DUAL_F2, e.value[0]) for e in m.entries()))
    rest = a0.inv() * m  # equals 1 + alpha B
    f2 = Zmod(2)
    b = Mat2(*(element(f2, e.value[1]) for e in rest.entries()))
    return a0, b


def eps4prime(m: Mat2) -> UnityRoot:
    """The exceptional character of SL2(F2[t]/(t^2)): with
    A = A0 (1 + alpha [[a, b], [c, *]]), the value is (-1)^(a+b+c)."""
    _, b = eps4prime_decompose(m)
    total = b.a.value + b.b.value + b.c.value
    return UnityRoot.of(total, 2)


def invariant_I(q: QuadForm) -> int:
    """The conjugation invariant of a binary quadratic form over Z/N.

    I = 0 for the zero form, or for N = 4 when the form vanishes mod 2;
    I = 1 when the discriminant is nonzero; otherwise I = Q(1, 0) when
    that value is a unit and Q(0, 1) when it is not.  By construction
    sigma(A) = I(form of A).
    """
    ring = q.ring
    if not isinstance(ring, Zmod) or ring.n not in _SUPPORTED_N:
        raise RingError(f"invariant_I needs a form over Z/2, Z/3 or Z/4, got {ring}")
    if q.is_zero():
        return 0
    if ring.n == 4:
        if all(e.value % 2 == 0 for e in (q.q20, q.q11, q.q02)):
            return 0
    zero_el = element(ring, 0)
    if q.disc() != zero_el:
        return 1
    lead = q.q20  # = Q(1, 0)
    if lead.is_unit():
        return lead.value
    return q.q02.value  # = Q(0, 1)


KINDS = ("trivial", "eps2", "eps3", "eps4", "eps4prime")

_KIND_TARGET = {
    "eps2": Zmod(2),
    "eps3": Zmod(3),
    "eps4": Zmod(4),
    "eps4prime": DUAL_F2,
}

_KIND_ORDER = {"trivial": 1, "eps2": 2, "eps3": 3, "eps4": 4, "eps4prime": 2}


@dataclass(frozen=True)
class CharacterSpec:
    """A character of SL2 over a finite ring: entrywise reduction
    followed by one of the explicit formulas."""

    source: Ring
    kind: str
    reduction: RingHom | None  # None only for the trivial character
    order: int

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise RingError(f"unknown character kind {self.kind!r}")
        if self.kind != "trivial":
            if self.reduction is None or self.reduction.source != self.source:
                raise RingError("reduction must start at the source ring")
            if self.reduction.target != _KIND_TARGET[self.kind]:
                raise RingError(
                    f"{self.kind} needs a reduction onto {_KIND_TARGET[self.kind]}"
                )


def character_spec(source: Ring, kind: str) -> CharacterSpec:
    """Build a CharacterSpec with the canonical reduction map."""
    if kind == "trivial":
        return CharacterSpec(source, "trivial", None, 1)
    red = hom_reduce(source, _KIND_TARGET[kind])
    return CharacterSpec(source, kind, red, _KIND_ORDER[kind])


def char_eval(spec: CharacterSpec, m: Mat2) -> UnityRoot:
    """Evaluate a character on an SL2 matrix over its source ring."""
    if m.ring != spec.source:
        raise RingError(f"matrix over {m.ring} fed to character over {spec.source}")
    if spec.kind == "trivial":
        return ROOT_ONE
    reduced = map_entries(spec.reduction, m)
    if spec.kind == "eps4prime":
        return eps4prime(reduced)
    return eps_n(reduced)


def zmod_character_group(n: int) -> list[CharacterSpec]:
    """Generators of the character group of SL2(Z/n) predicted by the
    classification: eps3 through Z/3 when 3 | n, eps4 through Z/4 when
    4 | n, and eps2 through Z/2 when n = 2 mod 4."""
    if n < 2:
        raise RingError(f"modulus must be at least 2, got {n}")
    source = Zmod(n)
    gens = []
    if n % 3 == 0:
        gens.append(character_spec(source, "eps3"))
    if n % 4 == 0:
        gens.append(character_spec(source, "eps4"))
    elif n % 2 == 0:
        gens.append(character_spec(source, "eps2"))
    return gens


def characters_equal(x: CharacterSpec, y: CharacterSpec, domain: list[Mat2]) -> bool:
    """Pointwise equality over an explicit domain."""
    return all(char_eval(x, m) == char_eval(y, m) for m in domain)
