import pytest

from toric_weights import build_face_lattice
from toric_weights.catalog import HEXAGON, PENTAGON, cube_cone, identity, polygon_cone, two_f_one


@pytest.fixture(scope="session")
def square():
    A = two_f_one()
    return A, build_face_lattice(A)


@pytest.fixture(scope="session")
def cube3():
    A = cube_cone(3)
    return A, build_face_lattice(A)


@pytest.fixture(scope="session")
def pentagon():
    A = polygon_cone(PENTAGON)
    return A, build_face_lattice(A)


@pytest.fixture(scope="session")
def hexagon():
    A = polygon_cone(HEXAGON, extra=[(0, 0)])
    return A, build_face_lattice(A)


def lattice_of(A):
    return build_face_lattice(A)


def boolean(d):
    return build_face_lattice(identity(d))


def face_by_columns(L, cols):
    cols = frozenset(cols)
    return next(f.id for f in L.faces if f.columns == cols)
