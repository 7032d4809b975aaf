"""Stanley g/h-polynomials and intersection cohomology Betti numbers.

Polynomials are tuples of ints (coefficient of t^i at index i) with
trailing zeros trimmed; the zero polynomial is ``()``.

Rank convention: an interval [lo, hi] of a cone lattice is read as the face
poset of a polytope whose empty face is ``lo``.  Its polytope dimension is
``rank(hi) - rank(lo) - 1``.  Reading the interval upside down (``hi`` as
the empty face) gives the polar polytope.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InternalInconsistency, NegativeEntry, NotEulerian
from .poset import FaceLattice


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def padd(p, q):
    n = max(len(p), len(q))
    return trim((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def pmul(p, q):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def pscale(p, c):
    return trim(c * a for a in p)


_TM1 = {0: (1,)}


def _t_minus_1(k):
    if k not in _TM1:
        _TM1[k] = pmul(_t_minus_1(k - 1), (-1, 1))
    return _TM1[k]


def _g_from_h(h, pdim):
    g = []
    for i in range(pdim // 2 + 1):
        hi = h[i] if i < len(h) else 0
        prev = h[i - 1] if 0 < i <= len(h) else 0
        g.append(hi - prev if i > 0 else hi)
    if any(c < 0 for c in g):
        raise NegativeEntry(f"negative g coefficient {g}")
    return trim(g)


def _cache(L):
    try:
        return L._gh_cache
    except AttributeError:
        L._gh_cache = {}
        return L._gh_cache


def _h(L: FaceLattice, lo, hi, reverse=False):
    """h of the polytope poset [lo, hi] (reversed: hi is the empty face)."""
    cache = _cache(L)
    key = ("h", lo, hi, reverse)
    if key in cache:
        return cache[key]
    top_rank, bot_rank = L.rank(hi), L.rank(lo)
    h = ()
    for F in L.between(lo, hi):
        if reverse:
            if F == lo:
                continue
            term = pmul(_t_minus_1(L.rank(F) - bot_rank - 1), _g(L, F, hi, True))
        else:
            if F == hi:
                continue
            term = pmul(_t_minus_1(top_rank - L.rank(F) - 1), _g(L, lo, F, False))
        h = padd(h, term)
    if any(c < 0 for c in h):
        raise NegativeEntry(f"negative h coefficient {h}")
    cache[key] = h
    return h


def _g(L: FaceLattice, lo, hi, reverse=False):
    if lo == hi:
        return (1,)
    cache = _cache(L)
    key = ("g", lo, hi, reverse)
    if key not in cache:
        pdim = L.rank(hi) - L.rank(lo) - 1
        cache[key] = _g_from_h(_h(L, lo, hi, reverse), pdim)
    return cache[key]


def _checked(P: FaceLattice):
    try:
        P.check_eulerian()
    except InternalInconsistency as exc:
        raise NotEulerian(str(exc)) from exc


def h_polynomial(P: FaceLattice):
    """h(P) for a polytope face poset whose bottom element is the empty face."""
    _checked(P)
    if P.bottom == P.top:
        raise ValueError("h is not defined for the empty polytope")
    return _h(P, P.bottom, P.top)


def g_polynomial(P: FaceLattice):
    _checked(P)
    return _g(P, P.bottom, P.top)


@dataclass(frozen=True)
class BettiVector:
    """Betti numbers by raw cohomological degree; zero degrees are omitted."""

    dim: int
    values: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "values", {k: v for k, v in sorted(self.values.items()) if v})
        if any(v < 0 for v in self.values.values()):
            raise NegativeEntry(f"negative Betti number in {self.values}")

    def __getitem__(self, k):
        return self.values.get(k, 0)

    def to_dict(self):
        return {str(k): v for k, v in self.values.items()}

    def poincare(self):
        """Even-degree coefficients as a polynomial in t = (degree 2)."""
        top = max(self.values, default=-1)
        return trim(self[2 * i] for i in range(top // 2 + 1))


def _from_poly(p, dim):
    return BettiVector(dim, {2 * i: c for i, c in enumerate(p)})


def ih_projective(P: FaceLattice) -> BettiVector:
    """ih^{2i} of the projective toric variety of P is h_i(P)."""
    return _from_poly(h_polynomial(P), P.dim - 1)


def ih_affine(coneL: FaceLattice) -> BettiVector:
    """ih^{2i} of the affine toric variety of a cone: g_i of the polar polytope."""
    return _from_poly(_g(coneL, coneL.bottom, coneL.top, reverse=True), coneL.dim)


def ih_compact(b: BettiVector) -> BettiVector:
    """Compact-support Betti numbers by duality: ih_c^{d+k} = ih^{d-k}."""
    return BettiVector(b.dim, {2 * b.dim - k: v for k, v in b.values.items()})


def ih_dual_Y(L: FaceLattice, tau, gamma) -> BettiVector:
    """ih of the toric variety of the dual of the quotient cone gamma/tau.

    Dualizing twice cancels, so this is g of the interval [tau, gamma] read
    as a polytope poset.
    """
    if not L.leq(tau, gamma):
        from .errors import NotComparable

        raise NotComparable(f"face {tau} is not contained in face {gamma}")
    return _from_poly(_g(L, tau, gamma), L.rank(gamma) - L.rank(tau))


def ih_quotient(L: FaceLattice, tau, gamma, k):
    """ih_c^{n+k}(X_{gamma/tau}) with n = dim gamma - dim tau; 0 unless 0 < k <= n."""
    n = L.rank(gamma) - L.rank(tau)
    if k <= 0 or k > n:
        return 0
    j = n - k
    if j % 2:
        return 0
    g = _g(L, tau, gamma, reverse=True)
    return g[j // 2] if j // 2 < len(g) else 0


def verify_stanley_identity(L: FaceLattice):
    """Left side of sum_gamma (-1)^dim(gamma) g(Y_{sigma/gamma}) g(X_gamma); should be ()."""
    total = ()
    for gamma in range(len(L)):
        term = pmul(_g(L, gamma, L.top), _g(L, L.bottom, gamma, reverse=True))
        total = padd(total, pscale(term, (-1) ** L.rank(gamma)))
    return total
