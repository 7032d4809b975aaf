"""Named generator matrices used by the CLI, the tests and the docs."""

import itertools

from .cone import GeneratorMatrix


def two_f_one():
    """Gauss 2F1: cone over the unit square."""
    return GeneratorMatrix.from_columns([(1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1)])


def identity(d):
    return GeneratorMatrix.from_columns([tuple(int(i == j) for i in range(d)) for j in range(d)])


def cube_cone(k):
    """Cone over the unit k-cube, one column (1, v) per vertex v."""
    return GeneratorMatrix.from_columns([(1,) + v for v in itertools.product((0, 1), repeat=k)])


def polygon_cone(vertices, extra=()):
    """Cone over a lattice polygon given by its vertices (plus optional extra points)."""
    return GeneratorMatrix.from_columns([(1, x, y) for x, y in list(vertices) + list(extra)])


HEXAGON = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]
PENTAGON = [(0, 0), (1, 0), (2, 1), (1, 2), (0, 1)]
