"""Exact linear algebra over Z, Q and F_p for small dense matrices.

Row-style Hermite normal form for integer lattices, nullspaces mod p,
and rational matrix inversion.  Everything works on plain lists of ints
or Fractions; matrix sizes here never exceed a few dozen rows.
"""

from __future__ import annotations

from fractions import Fraction


def hnf(rows: list[list[int]]) -> list[list[int]]:
    """Row Hermite normal form of the lattice spanned by the rows.

    Returns the nonzero rows: echelon with positive pivots, entries
    above each pivot reduced into [0, pivot).
    """
    if not rows:
        return []
    m = [list(r) for r in rows]
    ncols = len(m[0])
    pivot_rows: list[list[int]] = []
    row = 0
    for col in range(ncols):
        # find a row with nonzero entry in this column at or below `row`
        nz = [i for i in range(row, len(m)) if m[i][col] != 0]
        if not nz:
            continue
        # gcd out the column with extended-euclid style row combinations
        while len(nz) > 1:
            nz.sort(key=lambda i: abs(m[i][col]))
            i0 = nz[0]
            for i in nz[1:]:
                q = m[i][col] // m[i0][col]
                m[i] = [a - q * b for a, b in zip(m[i], m[i0])]
            nz = [i for i in range(row, len(m)) if m[i][col] != 0]
        i0 = nz[0]
        m[row], m[i0] = m[i0], m[row]
        if m[row][col] < 0:
            m[row] = [-a for a in m[row]]
        # reduce entries above the pivot
        for i in range(row):
            q = m[i][col] // m[row][col]
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[row])]
        row += 1
    return m[:row]


def hnf_square(rows: list[list[int]], n: int) -> list[list[int]]:
    """HNF of a full-rank lattice in Z^n; raises if the rank is lower."""
    h = hnf(rows)
    if len(h) != n:
        raise ValueError(f"lattice has rank {len(h)}, expected {n}")
    return h


def det_triangular(m: list[list[int]]) -> int:
    out = 1
    for i in range(len(m)):
        out *= m[i][i]
    return out


def nullspace_mod_p(m: list[list[int]], p: int) -> list[list[int]]:
    """Basis of {v : m @ v = 0 mod p} for vectors v of length ncols.

    Rows of m are equations; entries reduced mod p internally.
    """
    if not m:
        return []
    nrows, ncols = len(m), len(m[0])
    a = [[x % p for x in row] for row in m]
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, nrows) if a[i][col] % p != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = pow(a[row][col], -1, p)
        a[row] = [(x * inv) % p for x in a[row]]
        for i in range(nrows):
            if i != row and a[i][col]:
                f = a[i][col]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-a[r][fc]) % p
        basis.append(v)
    return basis


def left_nullspace_mod_p(m: list[list[int]], p: int) -> list[list[int]]:
    """Basis of {v : v @ m = 0 mod p}."""
    if not m:
        return []
    t = [list(col) for col in zip(*m)]
    return nullspace_mod_p(t, p)


def inv_rational(m: list[list[Fraction]]) -> list[list[Fraction]]:
    """Inverse of a nonsingular square matrix over Q."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [row[n:] for row in a]


def mat_mul(a, b):
    """Product of two matrices given as lists of rows (any exact scalars)."""
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]
