"""2x2 matrices and SL2 over a finite ring.

Provides the standard generators T(a), E(u), S, exhaustive enumeration
of SL2 at desk scale, entrywise reduction along ring homomorphisms, the
quadratic form attached to a matrix, and the elementary-word
decomposition available over local rings.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .rings import (
    DualF2,
    Ring,
    RingElement,
    RingError,
    RingHom,
    Zmod,
    element,
    enumerate_ring,
    is_local,
    one,
    zero,
)


@dataclass(frozen=True)
class Mat2:
    """A 2x2 matrix [[a, b], [c, d]] over a finite ring."""

    a: RingElement
    b: RingElement
    c: RingElement
    d: RingElement

    def __post_init__(self) -> None:
        ring = self.a.ring
        if not (self.b.ring == ring and self.c.ring == ring and self.d.ring == ring):
            raise RingError("matrix entries must share a ring")

    @property
    def ring(self) -> Ring:
        return self.a.ring

    def det(self) -> RingElement:
        return self.a * self.d - self.b * self.c

    def trace(self) -> RingElement:
        return self.a + self.d

    def is_sl2(self) -> bool:
        return self.det() == one(self.ring)

    def __mul__(self, other: "Mat2") -> "Mat2":
        if self.ring != other.ring:
            raise RingError("mixed rings in matrix product")
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def inv(self) -> "Mat2":
        if not self.is_sl2():
            raise RingError("inverse requires determinant 1")
        return Mat2(self.d, -self.b, -self.c, self.a)

    def power(self, k: int) -> "Mat2":
        base = self if k >= 0 else self.inv()
        k = abs(k)
        out = identity(self.ring)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def entries(self) -> tuple[RingElement, ...]:
        return (self.a, self.b, self.c, self.d)

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


def mat2(ring: Ring, a: int, b: int, c: int, d: int) -> Mat2:
    """Matrix from integer entries, reduced into the ring."""
    return Mat2(element(ring, a), element(ring, b), element(ring, c), element(ring, d))


def identity(ring: Ring) -> Mat2:
    return mat2(ring, 1, 0, 0, 1)


def gen_T(a: RingElement) -> Mat2:
    """The elementary matrix [[1, a], [0, 1]]."""
    r = a.ring
    return Mat2(one(r), a, zero(r), one(r))


def gen_E(u: RingElement) -> Mat2:
    """The diagonal matrix [[u, 0], [0, 1/u]]; u must be a unit."""
    r = u.ring
    return Mat2(u, zero(r), zero(r), u.inv())


def gen_S(ring: Ring) -> Mat2:
    """The matrix [[0, -1], [1, 0]]."""
    return mat2(ring, 0, -1, 1, 0)


DEFAULT_RING_BOUND = 16


def enumerate_sl2(ring: Ring, max_ring_size: int = DEFAULT_RING_BOUND) -> list[Mat2]:
    """All determinant-1 matrices over the ring, deterministic order.

    Generates all 4-tuples of entries and filters on the determinant;
    the ring size is capped to keep this exhaustive step cheap.
    """
    if ring.size > max_ring_size:
        raise RingError(
            f"ring size {ring.size} exceeds enumeration bound {max_ring_size}"
        )
    elems = enumerate_ring(ring)
    out = []
    for a, b, c, d in product(elems, repeat=4):
        if a * d - b * c == one(ring):
            out.append(Mat2(a, b, c, d))
    return out


def map_entries(h: RingHom, m: Mat2) -> Mat2:
    """Apply a ring homomorphism to each entry."""
    return Mat2(h(m.a), h(m.b), h(m.c), h(m.d))


@dataclass(frozen=True)
class QuadForm:
    """The binary quadratic form q20*x^2 + q11*x*y + q02*y^2."""

    q20: RingElement
    q11: RingElement
    q02: RingElement

    @property
    def ring(self) -> Ring:
        return self.q20.ring

    def disc(self) -> RingElement:
        four = element(self.ring, 4)
        return self.q11 * self.q11 - four * self.q20 * self.q02

    def evaluate(self, x: RingElement, y: RingElement) -> RingElement:
        return self.q20 * x * x + self.q11 * x * y + self.q02 * y * y

    def is_zero(self) -> bool:
        z = zero(self.ring)
        return self.q20 == z and self.q11 == z and self.q02 == z


def quadratic_form(m: Mat2) -> QuadForm:
    """The form c*x^2 + (d-a)*x*y - b*y^2 attached to a matrix.

    Conjugate matrices yield equivalent forms: the form of B*A*B^-1 at
    the column vector v equals the form of A at B^-1 * v.
    """
    return QuadForm(m.c, m.d - m.a, -m.b)


# Word tokens for elementary decompositions: ("T", x), ("S",), ("E", u).
Token = tuple


def word_product(ring: Ring, word: list[Token]) -> Mat2:
    """Multiply out a word of generator tokens."""
    out = identity(ring)
    for tok in word:
        if tok[0] == "T":
            out = out * gen_T(tok[1])
        elif tok[0] == "S":
            out = out * gen_S(ring)
        elif tok[0] == "E":
            out = out * gen_E(tok[1])
        else:
            raise ValueError(f"unknown token {tok!r}")
    return out


def elementary_decomposition(m: Mat2) -> list[Token]:
    """Write an SL2 matrix over a local ring as a word in T, S, E.

    Over a local ring one of c, a is a unit.  When c is a unit,
    A = T(a/c) S T(d c) E(c); otherwise A = S T(-c/a) S T(b a) E(-a).
    The c branch is preferred when both apply.
    """
    ring = m.ring
    if not is_local(ring):
        raise RingError(f"{ring} is not local; decomposition needs a local ring")
    if not m.is_sl2():
        raise RingError("decomposition requires determinant 1")
    a, b, c, d = m.entries()
    if c.is_unit():
        return [("T", a * c.inv()), ("S",), ("T", d * c), ("E", c)]
    if a.is_unit():
        return [("S",), ("T", -(c * a.inv())), ("S",), ("T", b * a), ("E", -a)]
    raise RingError("neither a nor c is a unit; ring cannot be local")


def expand_E(u: RingElement) -> list[Token]:
    """Rewrite E(-u) as S T(1/u) S T(u) S T(1/u)."""
    v = u.inv()
    return [("S",), ("T", v), ("S",), ("T", u), ("S",), ("T", v)]


def sl2_order_formula(n: int) -> int:
    """|SL2(Z/n)| = n^3 * prod over primes p | n of (1 - 1/p^2)."""
    from sympy import factorint

    out = n**3
    for p in factorint(n):
        out = out * (p * p - 1) // (p * p)
    return out
