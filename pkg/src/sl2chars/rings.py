"""Finite commutative rings serving as matrix-entry domains.

Two kinds of rings are supported: the integers modulo N and the dual
numbers over F2, i.e. F2[t]/(t^2) with nilpotent generator alpha.
Elements are immutable values in canonical form, so structural equality
and hashing work everywhere.  Products of rings are never materialized;
composite moduli are handled through their CRT components.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterator

from sympy import factorint


class RingError(ValueError):
    """Raised for invalid ring constructions or element operations."""


@dataclass(frozen=True)
class Zmod:
    """The ring Z/nZ, canonical representatives 0..n-1."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise RingError(f"modulus must be at least 2, got {self.n}")

    @property
    def size(self) -> int:
        return self.n

    def _values(self) -> Iterator[int]:
        return iter(range(self.n))

    def _add(self, u: int, v: int) -> int:
        return (u + v) % self.n

    def _mul(self, u: int, v: int) -> int:
        return (u * v) % self.n

    def _neg(self, u: int) -> int:
        return (-u) % self.n

    def _is_unit(self, u: int) -> bool:
        return gcd(u, self.n) == 1

    def _inv(self, u: int) -> int:
        return pow(u, -1, self.n)

    def _from_int(self, k: int) -> int:
        return k % self.n

    def _repr_value(self, u: int) -> str:
        return str(u)

    def __str__(self) -> str:
        return f"Z/{self.n}"


@dataclass(frozen=True)
class DualF2:
    """The dual numbers F2[t]/(t^2).  Values are bit pairs (c0, c1)
    standing for c0 + c1*alpha with alpha^2 = 0."""

    @property
    def size(self) -> int:
        return 4

    def _values(self) -> Iterator[tuple[int, int]]:
        return iter(((0, 0), (1, 0), (0, 1), (1, 1)))

    def _add(self, u, v):
        return ((u[0] + v[0]) & 1, (u[1] + v[1]) & 1)

    def _mul(self, u, v):
        # (a0 + a1 t)(b0 + b1 t) = a0 b0 + (a0 b1 + a1 b0) t
        return (u[0] & v[0], (u[0] & v[1]) ^ (u[1] & v[0]))

    def _neg(self, u):
        return u

    def _is_unit(self, u) -> bool:
        return u[0] == 1

    def _inv(self, u):
        # the units 1 and 1+alpha are both involutions
        return u

    def _from_int(self, k: int):
        return (k % 2, 0)

    def _repr_value(self, u) -> str:
        return {(0, 0): "0", (1, 0): "1", (0, 1): "a", (1, 1): "1+a"}[u]

    def __str__(self) -> str:
        return "F2[a]"


Ring = Zmod | DualF2

DUAL_F2 = DualF2()


@dataclass(frozen=True)
class RingElement:
    """An element of a finite ring, stored in canonical form."""

    ring: Ring
    value: object

    def _check(self, other: "RingElement") -> None:
        if self.ring != other.ring:
            raise RingError(f"mixed rings: {self.ring} and {other.ring}")

    def __add__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.ring, self.ring._add(self.value, other.value))

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def __neg__(self) -> "RingElement":
        return RingElement(self.ring, self.ring._neg(self.value))

    def __mul__(self, other: "RingElement") -> "RingElement":
        self._check(other)
        return RingElement(self.ring, self.ring._mul(self.value, other.value))

    def is_unit(self) -> bool:
        return self.ring._is_unit(self.value)

    def inv(self) -> "RingElement":
        if not self.is_unit():
            raise RingError(f"{self} is not a unit in {self.ring}")
        return RingElement(self.ring, self.ring._inv(self.value))

    def is_zero(self) -> bool:
        return self == zero(self.ring)

    def __str__(self) -> str:
        return self.ring._repr_value(self.value)


def element(ring: Ring, k: int) -> RingElement:
    """The image of the integer k in the ring."""
    return RingElement(ring, ring._from_int(k))


def zero(ring: Ring) -> RingElement:
    return element(ring, 0)


def one(ring: Ring) -> RingElement:
    return element(ring, 1)


def dual_element(c0: int, c1: int) -> RingElement:
    """The element c0 + c1*alpha of the dual numbers."""
    return RingElement(DUAL_F2, (c0 & 1, c1 & 1))


ALPHA = dual_element(0, 1)


def enumerate_ring(ring: Ring) -> list[RingElement]:
    """All ring elements, ascending canonical order, each exactly once."""
    return [RingElement(ring, v) for v in ring._values()]


def units(ring: Ring) -> list[RingElement]:
    return [x for x in enumerate_ring(ring) if x.is_unit()]


@dataclass(frozen=True)
class RingHom:
    """A ring homomorphism given by its action on canonical values."""

    source: Ring
    target: Ring
    _map: Callable[[object], object]

    def __call__(self, x: RingElement) -> RingElement:
        if x.ring != self.source:
            raise RingError(f"element of {x.ring} fed to hom from {self.source}")
        return RingElement(self.target, self._map(x.value))


def hom_reduce(source: Ring, target: Ring) -> RingHom:
    """The canonical reduction homomorphism, when one exists.

    Supported: Z/m -> Z/n for n | m, DualF2 -> Z/2 (alpha -> 0), and
    identity maps.
    """
    if source == target:
        return RingHom(source, target, lambda v: v)
    if isinstance(source, Zmod) and isinstance(target, Zmod):
        if source.n % target.n != 0:
            raise RingError(f"no reduction Z/{source.n} -> Z/{target.n}")
        n = target.n
        return RingHom(source, target, lambda v: v % n)
    if isinstance(source, DualF2) and isinstance(target, Zmod) and target.n == 2:
        return RingHom(source, target, lambda v: v[0])
    raise RingError(f"no canonical homomorphism {source} -> {target}")


def crt_decompose(n: int) -> list[tuple[Zmod, RingHom]]:
    """The prime-power components of Z/n with their reduction maps.

    The combined map onto the product of the components is a ring
    isomorphism.
    """
    if n < 2:
        raise RingError(f"modulus must be at least 2, got {n}")
    source = Zmod(n)
    out = []
    for p in sorted(factorint(n)):
        q = p ** factorint(n)[p]
        out.append((Zmod(q), hom_reduce(source, Zmod(q))))
    return out


def is_local(ring: Ring) -> bool:
    """Whether the ring is local (prime-power modulus, or the dual numbers)."""
    if isinstance(ring, DualF2):
        return True
    return len(factorint(ring.n)) == 1


class UnitSquareCase(enum.Enum):
    CASE1_F2 = "case1: residue field F2"
    CASE1_F3 = "case1: residue field F3"
    CASE2_Z2N = "case2: Z/2^n"
    CASE3_DUAL = "case3: F2[t]/(t^2)"
    NOT_EXPONENT_2 = "some unit squares to != 1"


@dataclass(frozen=True)
class UnitSquareClassification:
    case: UnitSquareCase
    n: int | None = None  # exponent for case 2
    residue_field: str | None = None  # for case 1


def classify_unit_square(ring: Ring) -> UnitSquareClassification:
    """Classify a finite local ring by whether all its units square to 1.

    Rings whose unit group has exponent at most 2 fall into three shapes:
    the fields F2 and F3, the rings Z/4 and Z/8, and the dual numbers
    over F2.  Everything else is reported as NOT_EXPONENT_2.
    """
    if not is_local(ring):
        raise RingError(f"{ring} is not local")
    for u in units(ring):
        if u * u != one(ring):
            return UnitSquareClassification(UnitSquareCase.NOT_EXPONENT_2)
    if isinstance(ring, DualF2):
        return UnitSquareClassification(UnitSquareCase.CASE3_DUAL)
    if ring.n == 2:
        return UnitSquareClassification(UnitSquareCase.CASE1_F2, residue_field="F2")
    if ring.n == 3:
        return UnitSquareClassification(UnitSquareCase.CASE1_F3, residue_field="F3")
    # remaining possibilities with exponent <= 2: Z/4 and Z/8
    exponent = {4: 2, 8: 3}[ring.n]
    return UnitSquareClassification(UnitSquareCase.CASE2_Z2N, n=exponent)
