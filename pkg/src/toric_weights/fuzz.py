"""Random pointed cones for property checks.

Columns have entries in [-3, 3].  A random integer functional w is drawn
first and every column with w.a <= 0 is resampled, so the cone is pointed
by construction.  Saturation and ZA = Z^d are not enforced: everything
checked on these samples depends on the face lattice only.
"""

import random

from . import linalg
from .cone import GeneratorMatrix


def random_pointed_matrix(rng: random.Random, d, n, entry_range=3):
    if n < d:
        raise ValueError("need n >= d for a full-rank matrix")
    while True:
        w = [rng.randint(-entry_range, entry_range) for _ in range(d)]
        if any(w):
            break
    while True:
        cols = []
        for _ in range(n):
            while True:
                c = tuple(rng.randint(-entry_range, entry_range) for _ in range(d))
                if linalg.dot(w, c) > 0:
                    break
            cols.append(c)
        A = GeneratorMatrix.from_columns(cols, strict=False)
        if A.rank == d:
            return A


def random_cones(count, seed, d=None, max_d=4, max_n=10):
    """Deterministic stream of ``count`` random pointed full-rank matrices."""
    rng = random.Random(seed)
    for _ in range(count):
        dd = d if d is not None else rng.randint(1, max_d)
        n = rng.randint(dd, max(dd, max_n))
        yield random_pointed_matrix(rng, dd, n)
