"""Brute-force machinery for finite matrix groups.

Everything the explicit character formulas claim is re-derived here
independently: subgroup closure, commutator subgroups, abelianization
structure, the full set of linear characters, semidirect decompositions
and kernels of reduction maps.  Groups stay small (at most a few
thousand elements), so exhaustive methods are used throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .characters import UnityRoot
from .matrices import Mat2, enumerate_sl2, identity, map_entries
from .rings import Ring, RingHom, Zmod


class GroupError(ValueError):
    """Raised for invalid group constructions."""


DEFAULT_SIZE_CAP = 10**6


def _fast_mul(ring):
    """Matrix product on raw entry 4-tuples; avoids element objects in
    the quadratic closure checks."""
    if isinstance(ring, Zmod):
        n = ring.n

        def mul(x, y):
            a, b, c, d = x
            e, f, g, h = y
            return ((a * e + b * g) % n, (a * f + b * h) % n,
                    (c * e + d * g) % n, (c * f + d * h) % n)

        return mul

    radd, rmul = ring._add, ring._mul

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return (radd(rmul(a, e), rmul(b, g)), radd(rmul(a, f), rmul(b, h)),
                radd(rmul(c, e), rmul(d, g)), radd(rmul(c, f), rmul(d, h)))

    return mul


def _raw(m: Mat2):
    return (m.a.value, m.b.value, m.c.value, m.d.value)


class FiniteGroup:
    """An explicit finite group of 2x2 matrices over one ring.

    The element sequence is deterministic; closure under products is
    verified on construction (a finite set of invertible matrices closed
    under multiplication is a group).
    """

    def __init__(self, ring: Ring, elements: list[Mat2], check: bool = True):
        self.ring = ring
        self.elements: tuple[Mat2, ...] = tuple(elements)
        self._index = {m: i for i, m in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise GroupError("duplicate elements")
        if identity(ring) not in self._index:
            raise GroupError("missing identity")
        if check:
            mul = _fast_mul(ring)
            keys = {_raw(m) for m in self.elements}
            for x in keys:
                for y in keys:
                    if mul(x, y) not in keys:
                        raise GroupError("element set is not closed under products")

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, m: Mat2) -> bool:
        return m in self._index

    def __iter__(self):
        return iter(self.elements)

    def is_subset_of(self, other: "FiniteGroup") -> bool:
        return all(m in other for m in self.elements)


def closure(gens: list[Mat2], size_cap: int | None = None,
            extra_conjugators: list[Mat2] | None = None) -> FiniteGroup:
    """Smallest subgroup containing the generators (BFS, deterministic).

    With extra_conjugators the result is additionally closed under
    conjugation by those matrices, i.e. the normal closure inside the
    group they generate.
    """
    if size_cap is None:
        size_cap = DEFAULT_SIZE_CAP
    if not gens:
        raise GroupError("need at least one generator")
    ring = gens[0].ring
    for g in gens:
        if not g.is_sl2():
            raise GroupError("generators must have determinant 1")
    conj = [(g, g.inv()) for g in (extra_conjugators or [])]
    seen = {identity(ring)}
    order = [identity(ring)]
    frontier = [identity(ring)]
    while frontier:
        nxt = []
        for m in frontier:
            candidates = [m * g for g in gens]
            candidates += [g * m * gi for g, gi in conj]
            for c in candidates:
                if c not in seen:
                    seen.add(c)
                    order.append(c)
                    nxt.append(c)
                    if len(seen) > size_cap:
                        raise GroupError(f"closure exceeds size cap {size_cap}")
        frontier = nxt
    return FiniteGroup(ring, order, check=False)


def small_generating_set(g: FiniteGroup) -> list[Mat2]:
    """A greedy small generating set (first elements not yet generated)."""
    if len(g) == 1:
        return [g.elements[0]]
    gens: list[Mat2] = []
    have = {identity(g.ring)}
    for m in g.elements:
        if m not in have:
            gens.append(m)
            have = set(closure(gens).elements)
            if len(have) == len(g):
                break
    return gens


def commutator_subgroup(g: FiniteGroup, size_cap: int | None = None) -> FiniteGroup:
    """The commutator subgroup, as the normal closure of the commutators
    of a generating set."""
    gens = small_generating_set(g)
    comms = []
    seen = set()
    for x in gens:
        for y in gens:
            c = x * y * x.inv() * y.inv()
            if c not in seen:
                seen.add(c)
                comms.append(c)
    if not comms:
        return closure([identity(g.ring)])
    return closure(comms, size_cap=size_cap, extra_conjugators=gens)


def element_order(m: Mat2) -> int:
    e = identity(m.ring)
    p = m
    k = 1
    while p != e:
        p = p * m
        k += 1
    return k


def elements_of_order_dividing(g: FiniteGroup, m: int) -> list[Mat2]:
    """All elements x with x^m = identity."""
    if m < 1:
        raise GroupError("exponent must be positive")
    e = identity(g.ring)
    return [x for x in g if x.power(m) == e]


def kernel_of_reduction(g: FiniteGroup, h: RingHom) -> FiniteGroup:
    """The subgroup of matrices mapping to the identity entrywise."""
    if h.source != g.ring:
        raise GroupError("homomorphism must start at the group ring")
    e = identity(h.target)
    members = [m for m in g if map_entries(h, m) == e]
    return FiniteGroup(g.ring, members, check=False)


def verify_semidirect(g: FiniteGroup, h: FiniteGroup, k: FiniteGroup) -> bool:
    """True iff G = H x| K: K normal in G, H meet K trivial, |H||K| = |G|."""
    if not (h.is_subset_of(g) and k.is_subset_of(g)):
        return False
    if len(h) * len(k) != len(g):
        return False
    inter = [m for m in h if m in k]
    if inter != [identity(g.ring)]:
        return False
    for x in small_generating_set(g):
        xi = x.inv()
        for m in k.elements:
            if x * m * xi not in k:
                return False
    return True


# --- abelianization and characters ----------------------------------------


def _coset_decomposition(g: FiniteGroup, k: FiniteGroup):
    """Partition of g into right cosets of k; returns (reps, elem -> coset)."""
    coset_of: dict[Mat2, int] = {}
    reps: list[Mat2] = []
    for m in g.elements:
        if m in coset_of:
            continue
        idx = len(reps)
        reps.append(m)
        for x in k.elements:
            coset_of[x * m] = idx
    return reps, coset_of


def _quotient_table(reps, coset_of):
    n = len(reps)
    table = [[0] * n for _ in range(n)]
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            table[i][j] = coset_of[a * b]
    return table


def _quotient_generators(table, ident):
    """Greedy generating set of the (abelian) quotient given by indices."""
    n = len(table)
    gens: list[int] = []
    have = {ident}
    for x in range(n):
        if x in have:
            continue
        gens.append(x)
        # regenerate subgroup from scratch
        have = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for y in frontier:
                for gidx in gens:
                    z = table[y][gidx]
                    if z not in have:
                        have.add(z)
                        nxt.append(z)
            frontier = nxt
        if len(have) == n:
            break
    return gens


def _index_order(table, ident, x):
    k = 1
    y = x
    while y != ident:
        y = table[y][x]
        k += 1
    return k


def _quotient_characters(table, ident):
    """All homomorphisms of the quotient into roots of unity, found by
    propagating generator assignments and rejecting inconsistencies."""
    n = len(table)
    gens = _quotient_generators(table, ident) if n > 1 else []
    orders = [_index_order(table, ident, x) for x in gens]
    chars = []
    seen = set()
    for assign in product(*(range(o) for o in orders)):
        # candidate: chi(gen_i) = exp(2 pi i * assign_i / order_i)
        values: dict[int, Fraction] = {ident: Fraction(0)}
        frontier = [ident]
        ok = True
        while frontier and ok:
            nxt = []
            for x in frontier:
                for gi, gidx in enumerate(gens):
                    y = table[x][gidx]
                    v = (values[x] + Fraction(assign[gi], orders[gi])) % 1
                    if y in values:
                        if values[y] != v:
                            ok = False
                            break
                    else:
                        values[y] = v
                        nxt.append(y)
                if not ok:
                    break
            frontier = nxt
        if ok and len(values) == n:
            key = tuple(values[i] for i in range(n))
            if key not in seen:
                seen.add(key)
                chars.append(values)
    return chars


@dataclass(frozen=True)
class AbelianStructure:
    """Invariant factors d1 | d2 | ... (ascending) of G/[G, G], together
    with the projection of each group element to its tuple of cyclic
    coordinates."""

    divisors: tuple[int, ...]
    projection: dict

    def order(self) -> int:
        out = 1
        for d in self.divisors:
            out *= d
        return out


def _character_basis(chars, table, ident):
    """Invariant-factor basis of the character group of the quotient.

    Greedily picks characters of maximal order whose span stays direct;
    the picked orders are the invariant factors in descending order.
    """
    def char_mul(u, v):
        return tuple((u[i] + v[i]) % 1 for i in range(len(u)))

    n = len(table)
    as_tuples = [tuple(c[i] for i in range(n)) for c in chars]
    total = len(as_tuples)
    identity_char = tuple(Fraction(0) for _ in range(n))

    def char_order(u):
        k = 1
        v = u
        while v != identity_char:
            v = char_mul(v, u)
            k += 1
        return k

    basis = []
    span = {identity_char}
    while len(span) < total:
        best = None
        best_order = 0
        for u in as_tuples:
            o = char_order(u)
            if o <= best_order:
                continue
            new_span = set(span)
            v = identity_char
            grew = True
            for _ in range(o - 1):
                v = char_mul(v, u)
                for w in span:
                    new_span.add(char_mul(w, v))
            if len(new_span) == len(span) * o:
                best, best_order, best_span = u, o, new_span
        if best is None:
            raise GroupError("failed to extract an abelian basis")
        basis.append((best, best_order))
        span = best_span
    return basis


def abelianization(g: FiniteGroup, size_cap: int | None = None) -> AbelianStructure:
    """Invariant factors of G/[G, G] and the projection map."""
    k = commutator_subgroup(g, size_cap=size_cap)
    reps, coset_of = _coset_decomposition(g, k)
    if len(reps) == 1:
        return AbelianStructure((), {m: () for m in g})
    ident = coset_of[identity(g.ring)]
    table = _quotient_table(reps, coset_of)
    chars = _quotient_characters(table, ident)
    basis = _character_basis(chars, table, ident)
    divisors = tuple(sorted(o for _, o in basis))
    proj = {}
    for m in g.elements:
        i = coset_of[m]
        proj[m] = tuple(int(u[i] * o) for u, o in sorted(basis, key=lambda b: b[1]))
    return AbelianStructure(divisors, proj)


def all_linear_characters(g: FiniteGroup, size_cap: int | None = None):
    """Every homomorphism from g into roots of unity, as dicts from
    elements to UnityRoot.  Deterministic order."""
    k = commutator_subgroup(g, size_cap=size_cap)
    reps, coset_of = _coset_decomposition(g, k)
    ident = coset_of[identity(g.ring)]
    table = _quotient_table(reps, coset_of)
    chars = _quotient_characters(table, ident)
    out = []
    for c in chars:
        out.append({m: UnityRoot(c[coset_of[m]]) for m in g.elements})
    out.sort(key=lambda ch: tuple(ch[m].exponent for m in g.elements))
    return out


@lru_cache(maxsize=None)
def sl2_group(ring: Ring) -> FiniteGroup:
    """SL2 over the ring as a cached FiniteGroup."""
    return FiniteGroup(ring, enumerate_sl2(ring), check=False)
