"""Generator matrices, facets and the face lattice of sigma = R_{>=0} A."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property

from . import linalg
from .errors import (
    BudgetExceeded,
    InternalInconsistency,
    MalformedInput,
    NotFullLattice,
    NotPointed,
    RankDeficient,
    ValidationError,
)

DEFAULT_ZONOTOPE_BUDGET = 200_000


@dataclass(frozen=True)
class GeneratorMatrix:
    """Integer d x n matrix whose columns a_1..a_n generate the semigroup NA.

    Columns are 0-indexed throughout the library.  ``lattice_index`` is the
    gcd of the maximal minors, so ``full_lattice`` means ZA = Z^d.
    """

    d: int
    n: int
    columns: tuple[tuple[int, ...], ...]
    rank: int = field(compare=False)
    lattice_index: int = field(compare=False)
    pointed: bool = field(compare=False)

    @classmethod
    def from_columns(cls, columns, strict=True):
        columns = tuple(tuple(int(x) for x in c) for c in columns)
        if not columns:
            raise MalformedInput("matrix has no columns")
        d = len(columns[0])
        if d == 0 or any(len(c) != d for c in columns):
            raise MalformedInput("columns have inconsistent length")
        if any(not any(c) for c in columns):
            raise MalformedInput("zero columns are not allowed")
        rows = [list(r) for r in zip(*columns)]
        r = linalg.rank(rows)
        index = linalg.maximal_minor_gcd(rows) if r == d else 0
        pointed = r == d and _is_pointed(columns, d)
        A = cls(d, len(columns), columns, r, index, pointed)
        if strict:
            A.validate()
        return A

    def validate(self):
        if self.rank < self.d:
            raise RankDeficient(f"rank {self.rank} < d = {self.d}")
        if self.lattice_index != 1:
            raise NotFullLattice(self.lattice_index)
        if not self.pointed:
            raise NotPointed("0 is a nontrivial nonnegative combination of the columns")

    @property
    def full_lattice(self):
        return self.lattice_index == 1

    @property
    def rows(self):
        return [list(r) for r in zip(*self.columns)]

    def permuted(self, perm):
        return GeneratorMatrix.from_columns([self.columns[p] for p in perm], strict=False)

    def to_text(self):
        lines = [f"{self.d} {self.n}"]
        lines += [" ".join(str(x) for x in row) for row in self.rows]
        return "\n".join(lines) + "\n"

    @cached_property
    def facets(self):
        return enumerate_facets(self)


@dataclass(frozen=True)
class FacetFunctional:
    normal: tuple[int, ...]
    incident: frozenset[int]


@dataclass(frozen=True)
class FaceDescriptor:
    id: int
    dim: int
    columns: frozenset[int]
    facets: frozenset[int] = frozenset()


def parse_matrix(text, strict=True):
    """Read the ``d n`` header and d rows of n integers; '#' lines are comments."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise MalformedInput("empty input")
    try:
        header = [int(t) for t in lines[0].split()]
    except ValueError as exc:
        raise MalformedInput(f"bad header {lines[0]!r}") from exc
    if len(header) != 2 or header[0] < 1 or header[1] < 1:
        raise MalformedInput(f"header must be two positive integers 'd n', got {lines[0]!r}")
    d, n = header
    body = lines[1:]
    if len(body) != d:
        raise MalformedInput(f"expected {d} rows, found {len(body)}")
    rows = []
    for i, ln in enumerate(body, start=1):
        toks = ln.split()
        if len(toks) != n:
            raise MalformedInput(f"row {i} has {len(toks)} entries, expected {n}")
        if not all(re.fullmatch(r"[+-]?\d+", t) for t in toks):
            raise MalformedInput(f"row {i} contains a non-integer token")
        rows.append([int(t) for t in toks])
    return GeneratorMatrix.from_columns(list(zip(*rows)), strict=strict)


def _candidate_hyperplanes(columns, d):
    """Yield (primitive normal, incident set) for every facet of the cone.

    Brute force: every facet of a full-dimensional cone is spanned by d-1
    independent columns lying on it, so each (d-1)-subset with a 1-dim
    orthogonal complement gives a candidate hyperplane.
    """
    seen = set()
    for subset in itertools.combinations(range(len(columns)), d - 1):
        basis = linalg.nullspace([columns[j] for j in subset], d)
        if len(basis) != 1:
            continue
        normal = linalg.primitive(basis[0])
        values = [linalg.dot(normal, c) for c in columns]
        if all(v <= 0 for v in values):
            normal = tuple(-x for x in normal)
            values = [-v for v in values]
        elif not all(v >= 0 for v in values):
            continue
        if normal in seen:
            continue
        seen.add(normal)
        yield normal, frozenset(j for j, v in enumerate(values) if v == 0)


def _is_pointed(columns, d):
    if d == 1:
        return all(c[0] > 0 for c in columns) or all(c[0] < 0 for c in columns)
    normals = [nrm for nrm, inc in _candidate_hyperplanes(columns, d) if len(inc) < len(columns)]
    return bool(normals) and linalg.rank(normals) == d


def enumerate_facets(A: GeneratorMatrix) -> list[FacetFunctional]:
    """All facets of sigma with primitive inward normals, sorted by incidence.

    For d = 1 the only facet is the apex, handled in the lattice builder;
    the result is then empty.
    """
    if A.d == 1:
        return []
    facets = [
        FacetFunctional(normal, inc)
        for normal, inc in _candidate_hyperplanes(A.columns, A.d)
        if linalg.rank([A.columns[j] for j in inc]) == A.d - 1
    ]
    facets.sort(key=lambda f: (sorted(f.incident), f.normal))
    return facets


def inequalities(A: GeneratorMatrix):
    """Inward facet normals, with the d = 1 apex convention made explicit."""
    if A.d == 1:
        return [((1 if A.columns[0][0] > 0 else -1,), frozenset())]
    return [(f.normal, f.incident) for f in A.facets]


def positive_functional(A: GeneratorMatrix):
    """An integer functional strictly positive on sigma minus the apex."""
    normals = [nrm for nrm, _ in inequalities(A)]
    return tuple(sum(col) for col in zip(*normals))


def in_cone(A: GeneratorMatrix, p):
    return all(linalg.dot(nrm, p) >= 0 for nrm, _ in inequalities(A))


def _semigroup_member(A, positive):
    memo = {}
    cols = [c for c in A.columns]

    def member(p):
        if not any(p):
            return True
        if p in memo:
            return memo[p]
        hit = False
        for c in cols:
            q = tuple(a - b for a, b in zip(p, c))
            if linalg.dot(positive, q) >= 0 and in_cone(A, q) and member(q):
                hit = True
                break
        memo[p] = hit
        return hit

    return member


def check_saturated(A: GeneratorMatrix, budget=DEFAULT_ZONOTOPE_BUDGET):
    """Decide whether NA = sigma ∩ Z^d.

    Every lattice point of sigma is a point of NA plus a lattice point of the
    half-open zonotope {sum mu_j a_j : 0 <= mu_j < 1}, so it suffices to test
    the lattice points of sigma inside the zonotope's bounding box.  Returns
    ``(True, None)`` or ``(False, witness)``.
    """
    lo = [sum(min(0, x) for x in row) for row in A.rows]
    hi = [sum(max(0, x) for x in row) for row in A.rows]
    count = 1
    for a, b in zip(lo, hi):
        count *= b - a + 1
    if count > budget:
        raise BudgetExceeded(f"zonotope box holds {count} lattice points > budget {budget}")
    member = _semigroup_member(A, positive_functional(A))
    # ascending positive-functional order keeps the recursion shallow and the witness small
    pts = [p for p in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))) if in_cone(A, p)]
    w = positive_functional(A)
    pts.sort(key=lambda p: (linalg.dot(w, p), p))
    for p in pts:
        if not member(p):
            return False, p
    return True, None


def build_face_lattice(A: GeneratorMatrix):
    """Face lattice of sigma; faces are identified by their column sets."""
    from .poset import FaceLattice

    if A.rank < A.d or not A.pointed:
        raise ValidationError("face lattice needs a pointed full-rank matrix")
    allcols = frozenset(range(A.n))
    facets = A.facets
    if A.d == 1:
        faces = {frozenset(): frozenset(), allcols: frozenset()}
    else:
        faces = {allcols: frozenset()}
        frontier = [f.incident for f in facets]
        while frontier:
            nxt = []
            for cs in frontier:
                if cs in faces:
                    continue
                faces[cs] = frozenset(i for i, f in enumerate(facets) if cs <= f.incident)
                nxt.extend(cs & f.incident for f in facets)
            frontier = nxt
    descs = []
    for cs, fs in faces.items():
        dim = linalg.rank([A.columns[j] for j in cs]) if cs else 0
        if A.d > 1:
            closure = allcols
            for i in fs:
                closure = closure & facets[i].incident
            if closure != cs:
                raise InternalInconsistency(f"face {sorted(cs)} is not closed")
        descs.append((dim, tuple(sorted(cs)), cs, fs))
    descs.sort(key=lambda t: (t[0], t[1]))
    if descs[0][0] != 0 or descs[0][2]:
        raise InternalInconsistency("apex face missing")
    faces_out = [FaceDescriptor(i, dim, cs, fs) for i, (dim, _, cs, fs) in enumerate(descs)]
    L = FaceLattice.from_faces(faces_out)
    L.check_graded()
    L.check_eulerian()
    return L
