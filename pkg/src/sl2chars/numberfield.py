"""Prime splitting in rings of integers and congruence character groups.

For a number field K = Q[x]/(f) only the primes 2 and 3 matter for the
character group of SL2(O_K): each prime with residue field F3
contributes a cyclic factor of order 3, each unramified prime with
residue field F2 a cyclic factor of order 4, and each ramified prime
with residue field F2 a Klein four-group factor.

Splitting data is read off the factorization of f mod p when p does not
divide the index (Kummer-Dedekind, justified by the Dedekind
criterion); otherwise a p-maximal order is computed with the Round-2
method and the splitting is obtained by decomposing O/pO into local
components with lifted idempotents.

All arithmetic is exact: arbitrary-precision integers and Fractions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import sympy
from sympy import GF, Poly, Symbol, ZZ

from .lattices import hnf_square, inv_rational, left_nullspace_mod_p

_X = Symbol("x")


class NumberFieldError(ValueError):
    """Raised for invalid polynomial or order inputs."""


@dataclass(frozen=True)
class IntPoly:
    """A polynomial with integer coefficients, ascending degree order."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs or self.coeffs[-1] == 0:
            raise NumberFieldError("leading coefficient must be nonzero")

    @staticmethod
    def from_coeffs(coeffs) -> "IntPoly":
        return IntPoly(tuple(int(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def to_sympy(self) -> Poly:
        return Poly(list(reversed(self.coeffs)), _X, domain=ZZ)

    def __call__(self, v: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * v + c
        return out

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = "x" if mag == 1 else f"{mag}*x"
            else:
                body = f"x^{k}" if mag == 1 else f"{mag}*x^{k}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms) if terms else "0"


def _from_sympy(p: Poly) -> IntPoly:
    return IntPoly.from_coeffs(list(reversed([int(c) for c in p.all_coeffs()])))


def poly_discriminant(f: IntPoly) -> int:
    """Exact discriminant of a monic integer polynomial."""
    if not f.is_monic:
        raise NumberFieldError("discriminant requires a monic polynomial")
    return int(sympy.discriminant(f.to_sympy(), _X))


def is_irreducible(f: IntPoly) -> bool:
    """Irreducibility over Q, decided by exact factorization over Z."""
    if f.degree < 1:
        return False
    _, factors = f.to_sympy().factor_list()
    return len(factors) == 1 and factors[0][1] == 1 and factors[0][0].degree() == f.degree


def _check_field_poly(f: IntPoly, trust_irreducible: bool) -> None:
    if f.degree < 2 or not f.is_monic:
        raise NumberFieldError("need a monic polynomial of degree at least 2")
    if not trust_irreducible and not is_irreducible(f):
        raise NumberFieldError(f"{f} is reducible over Q")


def factor_mod_p(f: IntPoly, p: int) -> list[tuple[IntPoly, int]]:
    """Monic irreducible factors of f mod p with multiplicities.

    Output is sorted by (degree, coefficients); coefficients are
    canonical representatives in [0, p).
    """
    if not sympy.isprime(p):
        raise NumberFieldError(f"{p} is not prime")
    if all(c % p == 0 for c in f.coeffs):
        raise NumberFieldError("polynomial vanishes mod p")
    fp = f.to_sympy().set_domain(GF(p, symmetric=False))
    _, factors = fp.factor_list()
    out = []
    for g, mult in factors:
        coeffs = tuple(int(c) % p for c in reversed(g.all_coeffs()))
        out.append((IntPoly(coeffs), int(mult)))
    out.sort(key=lambda gm: (gm[0].degree, gm[0].coeffs))
    return out


def dedekind_is_pmaximal(f: IntPoly, p: int) -> bool:
    """Dedekind's criterion: p does not divide the index [O_K : Z[x]/(f)].

    With f = prod g_i^e_i mod p, g = prod g_i and h = f/g mod p, lift g
    and h monically to Z and set F = (g*h - f)/p; the criterion holds
    iff gcd(F, g, h) = 1 mod p.
    """
    if not f.is_monic:
        raise NumberFieldError("Dedekind criterion requires a monic polynomial")
    dom = GF(p, symmetric=False)
    fp = f.to_sympy().set_domain(dom)
    g = Poly(1, _X, domain=dom)
    for gi, _ in factor_mod_p(f, p):
        g = g * gi.to_sympy().set_domain(dom)
    h = fp.exquo(g)
    g_lift = g.set_domain(ZZ)
    h_lift = h.set_domain(ZZ)
    diff = g_lift * h_lift - f.to_sympy()
    big_f = Poly([c // p for c in diff.all_coeffs()], _X, domain=ZZ) \
        if diff.all_coeffs() != [0] else Poly(0, _X, domain=ZZ)
    fbar = big_f.set_domain(dom)
    d = sympy.gcd(sympy.gcd(fbar, g), h)
    return d.degree() == 0


# --- orders ----------------------------------------------------------------


@dataclass(frozen=True)
class OrderBasis:
    """A Z-order in Q[x]/(f) containing the power basis.

    Rows of mat, divided by den, are a Hermite-normal-form basis in the
    power basis 1, x, ..., x^(n-1).  For p-maximal orders the
    denominator is a power of p.
    """

    poly: IntPoly
    mat: tuple[tuple[int, ...], ...]
    den: int

    @property
    def n(self) -> int:
        return self.poly.degree

    def rows(self) -> list[list[Fraction]]:
        return [[Fraction(a, self.den) for a in row] for row in self.mat]

    def index(self) -> int:
        """Index of the power-basis order inside this order."""
        det = 1
        for i in range(self.n):
            det *= self.mat[i][i]
        idx, rem = divmod(self.den**self.n, det)
        if rem:
            raise NumberFieldError("basis does not contain the power basis")
        return idx


def power_basis_order(f: IntPoly) -> OrderBasis:
    n = f.degree
    mat = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    return OrderBasis(f, mat, 1)


def _xpow_table(f: IntPoly) -> list[list[int]]:
    """Coefficient rows of x^k mod f for k = 0 .. 2n-2 (f monic)."""
    n = f.degree
    rows = [[int(i == k) for i in range(n)] for k in range(n)]
    for k in range(n, 2 * n - 1):
        prev = rows[-1]
        # multiply by x: shift, then reduce the overflow with x^n = -tail
        over = prev[n - 1]
        row = [0] + prev[: n - 1]
        row = [row[i] - over * f.coeffs[i] for i in range(n)]
        rows.append(row)
    return rows


def _vec_mul(xpow, u, v):
    """Product of two coefficient vectors modulo f, via the x-power table."""
    n = len(u)
    conv = [0] * (2 * n - 1)
    for i, ui in enumerate(u):
        if ui:
            for j, vj in enumerate(v):
                if vj:
                    conv[i + j] += ui * vj
    out = [0] * n
    for k, ck in enumerate(conv):
        if ck:
            row = xpow[k]
            for i in range(n):
                out[i] += ck * row[i]
    return out


def _structure_constants(order: OrderBasis):
    """Integer structure constants of the order: b_i b_j = sum c[i][j][k] b_k.

    Also the certificate that the basis really spans a ring.
    """
    n = order.n
    xpow = _xpow_table(order.poly)
    rows = order.rows()
    binv = inv_rational(rows)
    const = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            prod = _vec_mul(xpow, rows[i], rows[j])
            coords = [sum(prod[t] * binv[t][k] for t in range(n)) for k in range(n)]
            ints = []
            for c in coords:
                c = Fraction(c)
                if c.denominator != 1:
                    raise NumberFieldError("basis is not closed under multiplication")
                ints.append(c.numerator)
            const[i][j] = ints
            const[j][i] = ints
    return const


def _coords_of_one(order: OrderBasis):
    n = order.n
    binv = inv_rational(order.rows())
    coords = [Fraction(binv[0][k]) for k in range(n)]
    if any(c.denominator != 1 for c in coords):
        raise NumberFieldError("order does not contain 1")
    return [c.numerator for c in coords]


class _ModPAlgebra:
    """The finite-dimensional F_p-algebra O/pO in coordinates."""

    def __init__(self, order: OrderBasis, p: int):
        self.p = p
        self.n = order.n
        self.const = _structure_constants(order)
        self.one = [c % p for c in _coords_of_one(order)]

    def mul(self, u, v):
        p, n, const = self.p, self.n, self.const
        out = [0] * n
        for i, ui in enumerate(u):
            if ui:
                for j, vj in enumerate(v):
                    if vj:
                        cij = const[i][j]
                        w = ui * vj
                        for k in range(n):
                            if cij[k]:
                                out[k] += w * cij[k]
        return [x % p for x in out]

    def power(self, u, e: int):
        out = self.one
        base = u
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def frobenius_matrix(self):
        """Matrix of v -> v^q (rows: images of basis vectors), where
        q = p^m is the smallest p-power with p^m >= n, so that the map
        kills exactly the nilradical."""
        m = 1
        q = self.p
        while q < self.n:
            q *= self.p
            m += 1
        rows = [self.power([int(i == j) for j in range(self.n)], self.p)
                for i in range(self.n)]
        mat = rows
        for _ in range(m - 1):
            mat = [[sum(mat[i][t] * rows[t][k] for t in range(self.n)) % self.p
                    for k in range(self.n)] for i in range(self.n)]
        return mat

    def radical_vectors(self):
        return left_nullspace_mod_p(self.frobenius_matrix(), self.p)


def _normalize_order(f: IntPoly, int_rows, den: int) -> OrderBasis:
    mat = hnf_square(int_rows, f.degree)
    g = den
    for row in mat:
        for a in row:
            g = gcd(g, a)
    mat = tuple(tuple(a // g for a in row) for row in mat)
    return OrderBasis(f, mat, den // g)


def round2_step(order: OrderBasis, p: int) -> OrderBasis:
    """One enlargement step: the multiplier ring of the p-radical ideal.

    Returns an order equal to the input iff the input is p-maximal.
    """
    f = order.poly
    n = order.n
    alg = _ModPAlgebra(order, p)
    rad = alg.radical_vectors()

    mat = [list(row) for row in order.mat]
    # the p-radical ideal I: spanned by p*O and lifts of the radical of O/pO
    ideal_rows = [[p * a for a in row] for row in mat]
    for v in rad:
        ideal_rows.append([sum(v[i] * mat[i][k] for i in range(n)) for k in range(n)])
    ideal_mat = hnf_square(ideal_rows, n)

    xpow = _xpow_table(f)
    order_rows = order.rows()
    ideal_fracs = [[Fraction(a, order.den) for a in row] for row in ideal_mat]
    ideal_inv = inv_rational(ideal_fracs)

    # stack the coordinate matrices of multiplication by each ideal generator
    stacked = [[] for _ in range(n)]
    for gamma in ideal_fracs:
        for i in range(n):
            prod = _vec_mul(xpow, order_rows[i], gamma)
            coords = [sum(prod[t] * ideal_inv[t][k] for t in range(n))
                      for k in range(n)]
            for k in range(n):
                c = Fraction(coords[k])
                if c.denominator != 1:
                    raise NumberFieldError("ideal is not an order module")
                stacked[i].append(c.numerator)
    kernel = left_nullspace_mod_p(stacked, p)

    new_rows = [[p * a for a in row] for row in mat]
    for u in kernel:
        new_rows.append([sum(u[i] * mat[i][k] for i in range(n)) for k in range(n)])
    return _normalize_order(f, new_rows, p * order.den)


def round2_pmaximal_order(f: IntPoly, p: int) -> OrderBasis:
    """A p-maximal order containing Z[x]/(f), by repeated enlargement."""
    _check_field_poly(f, trust_irreducible=False)
    if not sympy.isprime(p):
        raise NumberFieldError(f"{p} is not prime")
    order = power_basis_order(f)
    if dedekind_is_pmaximal(f, p):
        return order
    while True:
        bigger = round2_step(order, p)
        if bigger == order:
            return order
        order = bigger


# --- prime splitting -------------------------------------------------------


@dataclass(frozen=True)
class PrimeSplit:
    """Splitting type of a rational prime: parts (e_i, f_i) with
    sum e_i * f_i = degree of the field."""

    p: int
    parts: tuple[tuple[int, int], ...]

    def count(self, residue_degree: int, ramified: bool | None = None) -> int:
        out = 0
        for e, fdeg in self.parts:
            if fdeg != residue_degree:
                continue
            if ramified is None or (e >= 2) == ramified:
                out += 1
        return out


def _seed_for(f: IntPoly, p: int) -> int:
    s = p
    for c in f.coeffs:
        s = (s * 1000003 + c) % (1 << 63)
    return s


def _row_rank_mod_p(rows, p):
    if not rows:
        return 0
    a = [[x % p for x in r] for r in rows]
    ncols = len(a[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], -1, p)
        a[rank] = [(x * inv) % p for x in a[rank]]
        for i in range(len(a)):
            if i != rank and a[i][col]:
                fct = a[i][col]
                a[i] = [(x - fct * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def _min_poly_mod_p(alg: _ModPAlgebra, e, z, p):
    """Minimal polynomial of z inside the component with identity e."""
    n = alg.n
    powers = [e]
    rows = [e]
    while True:
        nxt = alg.mul(powers[-1], z)
        # solve: is nxt in the span of previous powers?
        aug = [list(r) for r in rows]
        sol = _solve_mod_p(aug, nxt, p)
        if sol is not None:
            k = len(powers)
            coeffs = [(-c) % p for c in sol] + [1]
            return Poly(list(reversed(coeffs)), _X, domain=GF(p, symmetric=False))
        powers.append(nxt)
        rows.append(nxt)
        if len(powers) > n + 1:
            raise NumberFieldError("minimal polynomial search overran dimension")


def _solve_mod_p(rows, target, p):
    """Coefficients expressing target as a combination of rows, or None."""
    if not rows:
        return None
    k = len(rows)
    ncols = len(rows[0])
    # transpose system: sum c_i rows[i] = target
    a = [[rows[i][c] % p for i in range(k)] + [target[c] % p] for c in range(ncols)]
    piv_cols = []
    rank = 0
    for col in range(k):
        piv = next((i for i in range(rank, ncols) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], -1, p)
        a[rank] = [(x * inv) % p for x in a[rank]]
        for i in range(ncols):
            if i != rank and a[i][col]:
                fct = a[i][col]
                a[i] = [(x - fct * y) % p for x, y in zip(a[i], a[rank])]
        piv_cols.append(col)
        rank += 1
    # inconsistent if a nonzero rhs remains outside the pivot rows
    for i in range(rank, ncols):
        if a[i][k]:
            return None
    sol = [0] * k
    for r, col in enumerate(piv_cols):
        sol[col] = a[r][k]
    return sol


def _poly_eval_in_algebra(alg: _ModPAlgebra, poly: Poly, z, e):
    """poly(z) inside the component with identity e (Horner)."""
    p = alg.p
    out = [0] * alg.n
    for c in poly.all_coeffs():
        out = alg.mul(out, z)
        ci = int(c) % p
        if ci:
            out = [(o + ci * ei) % p for o, ei in zip(out, e)]
    return out


def _split_algebra(alg: _ModPAlgebra, seed: int):
    """Decompose O/pO into local components; returns (dim, residue_dim)
    per component."""
    p, n = alg.p, alg.n
    rng = random.Random(seed)
    rad = alg.radical_vectors()
    results = []
    stack = [alg.one]
    while stack:
        e = stack.pop()
        comp_rows = [alg.mul(e, [int(i == j) for j in range(n)]) for i in range(n)]
        dim_e = _row_rank_mod_p(comp_rows, p)
        rad_rows = [alg.mul(e, v) for v in rad]
        res_dim = dim_e - _row_rank_mod_p(rad_rows, p)
        split_done = False
        for _ in range(200):
            z = alg.mul(e, [rng.randrange(p) for _ in range(n)])
            m = _min_poly_mod_p(alg, e, z, p)
            factors = m.factor_list()[1]
            if len(factors) == 1:
                q = factors[0][0]
                if q.degree() == res_dim:
                    results.append((dim_e, res_dim))
                    split_done = True
                    break
                continue  # non-separating element, retry
            # coprime power factors give orthogonal idempotents via CRT
            for q, mult in factors:
                mi = q**mult
                ni = m.exquo(mi)
                s, _, g = sympy.gcdex(ni, mi)  # s*ni = 1 mod mi
                if g.degree() != 0:
                    raise NumberFieldError("factor split lost coprimality")
                wi = (ni * s).rem(m)
                ei = _poly_eval_in_algebra(alg, wi, z, e)
                if alg.mul(ei, ei) != ei:
                    raise NumberFieldError("CRT element is not idempotent")
                stack.append(ei)
            split_done = True
            break
        if not split_done:
            raise NumberFieldError("failed to separate algebra components")
    return results


def prime_splitting(f: IntPoly, p: int, trust_irreducible: bool = False) -> PrimeSplit:
    """Splitting type {(e_i, f_i)} of p in the ring of integers of Q[x]/(f)."""
    _check_field_poly(f, trust_irreducible)
    if not sympy.isprime(p):
        raise NumberFieldError(f"{p} is not prime")
    if dedekind_is_pmaximal(f, p):
        parts = tuple(sorted((mult, g.degree) for g, mult in factor_mod_p(f, p)))
        return PrimeSplit(p, parts)
    order = power_basis_order(f)
    while True:
        bigger = round2_step(order, p)
        if bigger == order:
            break
        order = bigger
    alg = _ModPAlgebra(order, p)
    comps = _split_algebra(alg, _seed_for(f, p))
    parts = []
    for dim_e, res_dim in comps:
        if res_dim <= 0 or dim_e % res_dim:
            raise NumberFieldError("inconsistent local component dimensions")
        parts.append((dim_e // res_dim, res_dim))
    parts.sort()
    split = PrimeSplit(p, tuple(parts))
    if sum(e * fd for e, fd in split.parts) != f.degree:
        raise NumberFieldError("splitting does not account for the full degree")
    return split


# --- character group -------------------------------------------------------


@dataclass(frozen=True)
class CharGroupDescriptor:
    """The congruence character group of SL2(O_K): counts of the three
    contributing prime types, the cyclic structure and the total order."""

    a: int            # primes with residue field F3
    q4: int           # unramified primes with residue field F2
    r4: int           # ramified primes with residue field F2
    structure: tuple[int, ...]
    order: int
    generators: tuple[str, ...]
    split2: PrimeSplit
    split3: PrimeSplit


def character_group(f: IntPoly, trust_irreducible: bool = False) -> CharGroupDescriptor:
    """Assemble the congruence character group from the splitting of 2 and 3."""
    split2 = prime_splitting(f, 2, trust_irreducible)
    split3 = prime_splitting(f, 3, trust_irreducible)
    a = split3.count(1)
    q4 = split2.count(1, ramified=False)
    r4 = split2.count(1, ramified=True)
    structure = (3,) * a + (4,) * q4 + (2, 2) * r4
    gens = tuple(
        ["eps_p"] * a + ["eps_q^2"] * q4
        + [lab for _ in range(r4) for lab in ("eps_r", "eps_r^2'")]
    )
    return CharGroupDescriptor(
        a=a, q4=q4, r4=r4,
        structure=structure,
        order=3**a * 4 ** (q4 + r4),
        generators=gens,
        split2=split2,
        split3=split3,
    )


# --- the unit-square ideal test --------------------------------------------


@dataclass(frozen=True)
class UnitIdealReport:
    """The ideal generated by u^2 - 1 over the supplied units.

    A unit ideal proves the abelianization trivial; anything smaller is
    inconclusive, since the supplied units need not generate the unit
    group.
    """

    norm: int
    is_unit_ideal: bool
    verdict: str  # "trivial" or "inconclusive"


def _mult_matrix(xpow, n, u):
    unit_rows = [[int(i == k) for i in range(n)] for k in range(n)]
    return [_vec_mul(xpow, row, u) for row in unit_rows]


def _element_norm(xpow, n, u) -> int:
    return int(sympy.Matrix(_mult_matrix(xpow, n, u)).det())


def unit_square_ideal(f: IntPoly, units: list[list[int]],
                      trust_irreducible: bool = False) -> UnitIdealReport:
    """Test the triviality criterion for the abelianization of SL2 of the
    equation order Z[x]/(f), from user-supplied units.

    Each unit is a coefficient list (ascending) of a polynomial in the
    generator; it must have norm +-1.  The report never claims a
    nontrivial abelianization.
    """
    _check_field_poly(f, trust_irreducible)
    n = f.degree
    xpow = _xpow_table(f)
    rows = []
    for u_coeffs in units:
        u_poly = Poly(list(reversed([int(c) for c in u_coeffs])), _X, domain=ZZ)
        u_poly = u_poly.rem(f.to_sympy())
        asc = list(reversed([int(c) for c in u_poly.all_coeffs()]))
        u = asc + [0] * (n - len(asc))
        if _element_norm(xpow, n, u) not in (1, -1):
            raise NumberFieldError(f"supplied element {u_coeffs} is not a unit")
        g = _vec_mul(xpow, u, u)
        g[0] -= 1  # u^2 - 1
        rows.extend(_mult_matrix(xpow, n, g))
    rows = [r for r in rows if any(r)]
    if not rows:
        return UnitIdealReport(norm=0, is_unit_ideal=False, verdict="inconclusive")
    mat = hnf_square(rows, n)
    norm = 1
    for i in range(n):
        norm *= mat[i][i]
    trivial = norm == 1
    return UnitIdealReport(norm=norm, is_unit_ideal=trivial,
                           verdict="trivial" if trivial else "inconclusive")
