"""Graded posets of faces: intervals, order reversal, flags, compositions.

A ``FaceLattice`` stores its order as integer bitmasks (bit j of
``below[i]`` is set iff face j <= face i), which keeps interval queries and
the Eulerian check cheap at the sizes we care about.
"""

from __future__ import annotations

import json
from collections.abc import Iterator

from .cone import FaceDescriptor
from .errors import InternalInconsistency, NotComparable


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FaceLattice:
    """Bounded graded poset; the rank of a face is its ``dim``.

    ``source`` maps each id to the id it had in the lattice this one was
    cut out of (identity for lattices built from a matrix).
    """

    def __init__(self, faces, below, source=None):
        self.faces = tuple(faces)
        self.below = tuple(below)
        n = len(self.faces)
        above = [0] * n
        for i, m in enumerate(self.below):
            for j in _bits(m):
                above[j] |= 1 << i
        self.above = tuple(above)
        self.source = tuple(source) if source is not None else tuple(range(n))
        self.dim = max(f.dim for f in self.faces)
        mins = [i for i in range(n) if self.below[i] == 1 << i]
        maxs = [i for i in range(n) if self.above[i] == 1 << i]
        if len(mins) != 1 or len(maxs) != 1:
            raise InternalInconsistency("poset is not bounded")
        self.bottom, self.top = mins[0], maxs[0]
        self.rank_mask = [0] * (self.dim + 1)
        for f in self.faces:
            self.rank_mask[f.dim] |= 1 << f.id
        self.lower_covers = tuple(tuple(self._covers(i, down=True)) for i in range(n))
        self.upper_covers = tuple(tuple(self._covers(i, down=False)) for i in range(n))

    @classmethod
    def from_faces(cls, faces):
        """Order faces by inclusion of their column sets."""
        below = []
        for f in faces:
            m = 0
            for g in faces:
                if g.columns <= f.columns:
                    m |= 1 << g.id
            below.append(m)
        return cls(faces, below)

    def _covers(self, i, down):
        rel = self.below[i] if down else self.above[i]
        out = []
        for j in _bits(rel & ~(1 << i)):
            lo, hi = (j, i) if down else (i, j)
            if self.above[lo] & self.below[hi] == (1 << lo) | (1 << hi):
                out.append(j)
        return out

    def __len__(self):
        return len(self.faces)

    def __repr__(self):
        return f"FaceLattice(dim={self.dim}, faces={len(self)}, f={self.f_vector()})"

    def leq(self, x, y):
        return bool(self.below[y] >> x & 1)

    def rank(self, x):
        return self.faces[x].dim

    def between(self, x, y):
        """Ids of the closed interval [x, y] (empty if x is not below y)."""
        return list(_bits(self.above[x] & self.below[y]))

    def of_dim(self, k):
        return list(_bits(self.rank_mask[k])) if 0 <= k <= self.dim else []

    def f_vector(self):
        """Face counts by dimension 0..dim, apex and top included."""
        return [bin(m).count("1") for m in self.rank_mask]

    def coatoms(self):
        return list(self.lower_covers[self.top])

    def atoms(self):
        return list(self.upper_covers[self.bottom])

    def is_boolean(self):
        return len(self) == 2 ** self.dim

    def check_graded(self):
        for i in range(len(self)):
            for j in self.upper_covers[i]:
                if self.rank(j) != self.rank(i) + 1:
                    raise InternalInconsistency(f"cover {i} < {j} skips a rank")
        if self.rank(self.bottom) != 0:
            raise InternalInconsistency("bottom does not have rank 0")

    def check_eulerian(self):
        for x in range(len(self)):
            for y in _bits(self.above[x] & ~(1 << x)):
                iv = self.above[x] & self.below[y]
                s = 0
                for r in range(self.rank(x), self.rank(y) + 1):
                    c = bin(iv & self.rank_mask[r]).count("1")
                    s += c if r % 2 == 0 else -c
                if s != 0:
                    raise InternalInconsistency(f"interval [{x}, {y}] is not Eulerian")

    def to_dict(self):
        return {
            "d": self.dim,
            "faces": [
                {
                    "id": f.id,
                    "dim": f.dim,
                    "columns": sorted(f.columns),
                    "covers": sorted(self.lower_covers[f.id]),
                }
                for f in self.faces
            ],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


def _relabel(items, below_of, source_of):
    """Build a lattice from (dim, columns, facets, old id) tuples.

    Ids are assigned in (dim, sorted columns) order so they are stable.
    """
    items = sorted(items, key=lambda t: (t[0], sorted(t[1]), sorted(t[2])))
    new_id = {t[3]: i for i, t in enumerate(items)}
    faces, below = [], []
    for i, (dim, cols, facs, old) in enumerate(items):
        faces.append(FaceDescriptor(i, dim, frozenset(cols), frozenset(facs)))
        m = 0
        for j in _bits(below_of(old)):
            if j in new_id:
                m |= 1 << new_id[j]
        below.append(m)
    return FaceLattice(faces, below, [source_of(t[3]) for t in items])


def interval(L: FaceLattice, tau, gamma) -> FaceLattice:
    """The faces between tau and gamma, regraded so tau has dim 0.

    This is the face lattice of the quotient cone gamma/tau.
    """
    if not L.leq(tau, gamma):
        raise NotComparable(f"face {tau} is not contained in face {gamma}")
    base = L.rank(tau)
    items = [
        (L.rank(i) - base, L.faces[i].columns, L.faces[i].facets, i)
        for i in L.between(tau, gamma)
    ]
    return _relabel(items, lambda i: L.below[i], lambda i: L.source[i])


def dualize(L: FaceLattice) -> FaceLattice:
    """Order-reversed lattice with dim' = dim(L) - dim.

    The new column set of a face is the set of coatom positions above the
    old face (facets of sigma become the rays of the dual cone); its facet
    set is the set of atom positions below the old face.
    """
    coatoms = {c: k for k, c in enumerate(sorted(L.coatoms()))}
    atoms = {a: k for k, a in enumerate(sorted(L.atoms()))}
    items = []
    for f in L.faces:
        cols = {coatoms[c] for c in _bits(L.above[f.id]) if c in coatoms}
        facs = {atoms[a] for a in _bits(L.below[f.id]) if a in atoms}
        items.append((L.dim - f.dim, cols, facs, f.id))
    return _relabel(items, lambda i: L.above[i], lambda i: L.source[i])


def flags_between(L: FaceLattice, tau, gamma, m) -> Iterator[tuple[int, ...]]:
    """Strict chains tau = c_0 < c_1 < ... < c_m = gamma, each once.

    Yields tuples of face ids of length m + 1.
    """
    if not L.leq(tau, gamma):
        return
    target = L.rank(gamma)

    def extend(chain, steps_left):
        cur = chain[-1]
        if steps_left == 0:
            if cur == gamma:
                yield tuple(chain)
            return
        if steps_left == 1:
            if cur != gamma:
                yield tuple(chain) + (gamma,)
            return
        for nxt in _bits(L.above[cur] & L.below[gamma] & ~(1 << cur) & ~(1 << gamma)):
            if target - L.rank(nxt) >= steps_left - 1:
                chain.append(nxt)
                yield from extend(chain, steps_left - 1)
                chain.pop()

    if m < 0 or L.rank(gamma) - L.rank(tau) < m:
        return
    yield from extend([tau], m)


def compositions(t, m=None) -> Iterator[tuple[int, ...]]:
    """Ordered sequences of positive integers summing to t (of length m if given).

    These are the "partitions" of the weight sums: order matters, so there
    are 2**(t-1) of them in total.
    """
    if t < 1:
        return
    lengths = range(1, t + 1) if m is None else [m]
    for length in lengths:
        if length < 1 or length > t:
            continue
        yield from _compositions(t, length)


def _compositions(t, m):
    if m == 1:
        yield (t,)
        return
    for first in range(1, t - m + 2):
        for rest in _compositions(t - first, m - 1):
            yield (first,) + rest


def is_isomorphic(L1: FaceLattice, L2: FaceLattice) -> bool:
    """Rank-preserving isomorphism of the cover graphs (test helper)."""
    import networkx as nx
    from networkx.algorithms.isomorphism import DiGraphMatcher

    if L1.f_vector() != L2.f_vector():
        return False

    def graph(L):
        G = nx.DiGraph()
        for f in L.faces:
            G.add_node(f.id, rank=f.dim)
            for c in L.lower_covers[f.id]:
                G.add_edge(c, f.id)
        return G

    matcher = DiGraphMatcher(graph(L1), graph(L2), node_match=lambda a, b: a["rank"] == b["rank"])
    return matcher.is_isomorphic()
