"""Explicit generators of the weight filtration on M_A^0 for d <= 3.

Monomials are exponent vectors u in N^n standing for prod_j d_j^{u_j}; their
A-degree is A @ u.  Level d + k is generated by the monomials whose degree
is interior to a face of dimension >= d - k.  For d = 3 the level 4 also
carries the Euler-type operators e_r = sum_j F_r(a_j) x_j d_j built from the
distinguished ray generators b_r.

Ideal generators are only searched up to a total degree bound, so the
monomial lists are "generators up to degree B".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .cone import GeneratorMatrix, inequalities
from .errors import (
    BoundTooSmall,
    DecompositionFailure,
    DependencyCountMismatch,
    MissingPrimitive,
    ScopeError,
)
from .poset import FaceLattice


@dataclass(frozen=True)
class EulerOperator:
    """sum_j c_j x_j d_j + constant, with exact rational coefficients."""

    terms: dict
    constant: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(
            self, "terms", {j: Fraction(c) for j, c in sorted(self.terms.items()) if c != 0}
        )

    def render(self):
        parts = []
        for j, c in self.terms.items():
            coef = "" if c == 1 else f"{c}*"
            parts.append(f"{coef}x{j + 1}*d{j + 1}")
        if self.constant:
            parts.append(str(self.constant))
        return " + ".join(parts) if parts else "0"

    def to_dict(self):
        return {
            "terms": {str(j): str(c) for j, c in self.terms.items()},
            "constant": str(self.constant),
        }


@dataclass(frozen=True)
class Monomial:
    u: tuple
    degree: tuple
    face_dim: int

    def render(self):
        if not any(self.u):
            return "1"
        return "*".join(
            f"d{j + 1}" if e == 1 else f"d{j + 1}^{e}" for j, e in enumerate(self.u) if e
        )

    def to_dict(self):
        return {"u": list(self.u), "degree": list(self.degree), "face_dim": self.face_dim}


@dataclass
class FiltrationLevel:
    level: int
    monomials: list
    operators: list = field(default_factory=list)
    operators_redundant: bool = False

    def to_dict(self):
        return {
            "level": self.level,
            "monomials": [m.to_dict() for m in self.monomials],
            "operators": [op.to_dict() for op in self.operators],
        }


def _face_of_point(A: GeneratorMatrix, L: FaceLattice, a):
    """Id of the face whose relative interior contains the point a of sigma."""
    cols = frozenset(range(A.n))
    for normal, incident in inequalities(A):
        if linalg.dot(normal, a) == 0:
            cols &= incident
    for f in L.faces:
        if f.columns == cols:
            return f.id
    raise ValueError(f"{a} is not in the cone")


def interior_test(L: FaceLattice, A: GeneratorMatrix, a, tau):
    """True iff the lattice point a lies in the relative interior of face tau."""
    if any(Fraction(x).denominator != 1 for x in a):
        return False
    cols = L.faces[tau].columns
    for normal, incident in inequalities(A):
        v = linalg.dot(normal, a)
        if cols <= incident:
            if v != 0:
                return False
        elif v <= 0:
            return False
    return True


def distinguished_columns(A: GeneratorMatrix, L: FaceLattice):
    """Primitive generator of each ray of sigma, as a column index (rays in id order)."""
    out = []
    for ray in L.of_dim(1):
        cols = sorted(L.faces[ray].columns)
        prim = linalg.primitive(A.columns[cols[0]])
        hit = [j for j in cols if A.columns[j] == prim]
        if not hit:
            raise MissingPrimitive(f"primitive generator {prim} of ray {ray} is not a column")
        out.append(hit[0])
    return out


def visible(A: GeneratorMatrix, L: FaceLattice, r, j):
    """Whether a_j is visible from b_r, i.e. the two share a closed facet.

    a_j is invisible from b_r exactly when the open segment between them
    meets the interior of sigma.
    """
    b = distinguished_columns(A, L)[r]
    return any(b in f.incident and j in f.incident for f in A.facets)


def _require_d3(A):
    if A.d != 3:
        raise ScopeError("F_r and e_r are only defined for d = 3")


def _neighbours(A, L, r):
    """For each facet through b_r: (facet columns, the other distinguished column)."""
    dist = distinguished_columns(A, L)
    b = dist[r]
    out = []
    for f in A.facets:
        if b not in f.incident:
            continue
        others = [c for c in dist if c != b and c in f.incident]
        if len(others) != 1:
            raise DecompositionFailure(f"facet {sorted(f.incident)} does not have two rays")
        out.append((f.incident, others[0]))
    return out


def f_r_values(A: GeneratorMatrix, L: FaceLattice, r):
    """F_r(a_j) for all j, as Fractions."""
    _require_d3(A)
    b = distinguished_columns(A, L)[r]
    values = [Fraction(0)] * A.n
    for incident, other in _neighbours(A, L, r):
        basis = [[A.columns[b][i], A.columns[other][i]] for i in range(3)]
        for j in incident:
            sol = linalg.solve(basis, list(A.columns[j]))
            if sol is None or min(sol) < 0:
                raise DecompositionFailure(f"a_{j + 1} does not decompose over b_r and its neighbour")
            if values[j] and values[j] != sol[0]:
                raise DecompositionFailure(f"inconsistent F_{r + 1}(a_{j + 1})")
            values[j] = sol[0]
    return values


def euler_functional(A: GeneratorMatrix, L: FaceLattice, r):
    """Linear functional equal to F_r on b_r and on its two neighbouring rays."""
    _require_d3(A)
    b = distinguished_columns(A, L)[r]
    nbrs = sorted({other for _, other in _neighbours(A, L, r)})
    F = f_r_values(A, L, r)
    pts = [b] + nbrs
    return tuple(linalg.solve([list(A.columns[p]) for p in pts], [F[p] for p in pts]))


def _value_matrix(A, L):
    return [f_r_values(A, L, r) for r in range(len(L.of_dim(1)))]


def _boundary_columns(A):
    return sorted(set().union(*(f.incident for f in A.facets)))


def dependency_dimension(A: GeneratorMatrix, L: FaceLattice):
    """dim {c : c @ M agrees with some y @ A on all non-interior columns}.

    Columns interior to sigma are dropped because their d_j already lie in
    the lowest filtration level.
    """
    M = _value_matrix(A, L)
    J = _boundary_columns(A)
    stacked = [[row[j] for j in J] for row in M] + [[row[j] for j in J] for row in A.rows]
    return len(M) + A.d - linalg.rank(stacked)


def euler_operators(A: GeneratorMatrix, L: FaceLattice):
    _require_d3(A)
    ops = [EulerOperator(dict(enumerate(row))) for row in _value_matrix(A, L)]
    dim = dependency_dimension(A, L)
    if dim != A.d:
        raise DependencyCountMismatch(f"dependency space has dimension {dim}, expected {A.d}")
    return ops


def operators_redundant(A: GeneratorMatrix, L: FaceLattice):
    """True iff every e_r is an Euler operator of A modulo interior columns."""
    J = _boundary_columns(A)
    base = [[row[j] for j in J] for row in A.rows]
    return all(
        linalg.rank(base + [[row[j] for j in J]]) == A.d for row in _value_matrix(A, L)
    )


def _minimal(vectors):
    vectors = sorted(set(vectors), key=lambda v: (sum(v), v))
    keep = []
    for v in vectors:
        if not any(all(a <= b for a, b in zip(w, v)) for w in keep):
            keep.append(v)
    return sorted(keep)


def default_degree_bound(A: GeneratorMatrix):
    return max(A.d, max(sum(c) for c in A.columns))


def filtration_generators(A: GeneratorMatrix, L: FaceLattice, degree_bound=None):
    """Levels d..2d of the weight filtration, monomials minimal up to the bound."""
    d = A.d
    if d > 3 and not L.is_boolean():
        raise ScopeError(
            "explicit generators are implemented for d <= 3 and simplicial cones only"
        )
    B = default_degree_bound(A) if degree_bound is None else degree_bound
    face_dim = {}
    degree = {}
    for total in range(B + 1):
        for combo in itertools.combinations_with_replacement(range(A.n), total):
            u = [0] * A.n
            for j in combo:
                u[j] += 1
            u = tuple(u)
            deg = tuple(sum(A.columns[j][i] * u[j] for j in range(A.n)) for i in range(d))
            degree[u] = deg
            face_dim[u] = L.rank(_face_of_point(A, L, deg))
    found = {}
    for u, fd in face_dim.items():
        found.setdefault(_face_of_point(A, L, degree[u]), True)
    missing = [f.id for f in L.faces if f.id not in found]
    if missing:
        raise BoundTooSmall(f"faces {missing} have no interior monomial of degree <= {B}")
    levels = []
    for k in range(d + 1):
        gens = _minimal(u for u, fd in face_dim.items() if fd >= d - k)
        lvl = FiltrationLevel(d + k, [Monomial(u, degree[u], face_dim[u]) for u in gens])
        if d == 3 and k == d - 2:
            lvl.operators = euler_operators(A, L)
            lvl.operators_redundant = operators_redundant(A, L)
        levels.append(lvl)
    return levels
