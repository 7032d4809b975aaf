"""Small exact linear algebra over Q and Z.

Matrices are lists of rows.  Entries are ints or Fractions; nothing here
touches floating point.
"""

from fractions import Fraction
from math import gcd


def rref(rows):
    """Reduced row echelon form over Q.  Returns (matrix, pivot_columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows):
    return len(rref(rows)[1]) if rows else 0


def nullspace(rows, ncols):
    """Basis of {x in Q^ncols : rows @ x = 0}."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -m[i][f]
        basis.append(v)
    return basis


def solve(rows, rhs):
    """One solution x of rows @ x = rhs, or None if inconsistent."""
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        x[p] = m[i][ncols]
    return x


def primitive(v):
    """Scale a rational vector to the primitive integer vector on its ray."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(x // g for x in ints)


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def transpose(rows):
    return [list(col) for col in zip(*rows)]


def maximal_minor_gcd(rows):
    """gcd of all maximal minors of an integer d x n matrix of rank d.

    Equals the index of the lattice spanned by the columns in Z^d; computed
    by integer column reduction to Hermite form instead of expanding all
    C(n, d) minors.
    """
    cols = [list(c) for c in zip(*rows)]
    d = len(rows)
    index = 1
    for i in range(d):
        live = [c for c in cols if c[i] != 0]
        rest = [c for c in cols if c[i] == 0]
        while len(live) > 1:
            live.sort(key=lambda c: abs(c[i]))
            piv = live[0]
            nxt = [piv]
            for c in live[1:]:
                q = c[i] // piv[i]
                c = [a - q * b for a, b in zip(c, piv)]
                (nxt if c[i] != 0 else rest).append(c)
            live = nxt
        if not live:
            return 0
        index *= abs(live[0][i])
        cols = rest
    return index
