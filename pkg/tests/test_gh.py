import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import boolean, face_by_columns
from oracles import classical_h
from toric_weights import (
    build_face_lattice,
    g_polynomial,
    h_polynomial,
    ih_affine,
    ih_compact,
    ih_dual_Y,
    ih_projective,
    interval,
    verify_stanley_identity,
)
from toric_weights.catalog import cube_cone, identity
from toric_weights.errors import NotEulerian
from toric_weights.fuzz import random_pointed_matrix
from toric_weights.poset import FaceLattice
from toric_weights.cone import FaceDescriptor


def test_h_edge_square_simplex(square):
    _, L = square
    edge = boolean(2)
    assert h_polynomial(edge) == (1, 1)
    assert h_polynomial(L) == (1, 2, 1)
    for k in range(1, 6):
        assert h_polynomial(boolean(k + 1)) == (1,) * (k + 1)


def test_g_examples(square):
    _, L = square
    assert g_polynomial(L) == (1, 1)
    for k in range(1, 6):
        assert g_polynomial(boolean(k)) == (1,)
    assert g_polynomial(_point()) == (1,)


def _point():
    return FaceLattice([FaceDescriptor(0, 0, frozenset())], [1])


def test_h_cube_and_octahedron(cube3):
    _, L = cube3
    # toric h_1 = f_0 - dim P for any polytope; cube: 8 - 3
    assert h_polynomial(L) == (1, 5, 5, 1)
    assert g_polynomial(L) == (1, 4)
    oct_h = classical_h({-1: 1, 0: 6, 1: 12, 2: 8}, 3)
    assert oct_h == (1, 3, 3, 1)
    from toric_weights import dualize

    assert h_polynomial(dualize(L)) == oct_h


def test_not_eulerian():
    # a bounded graded poset with a diamond missing one element
    faces = [FaceDescriptor(0, 0, frozenset()), FaceDescriptor(1, 1, frozenset({0})),
             FaceDescriptor(2, 2, frozenset({0, 1}))]
    P = FaceLattice(faces, [0b001, 0b011, 0b111])
    with pytest.raises(NotEulerian):
        h_polynomial(P)


def test_ih_projective(square):
    _, L = square
    assert ih_projective(L).values == {0: 1, 2: 2, 4: 1}
    assert ih_projective(boolean(1)).values == {0: 1}
    assert ih_projective(boolean(2)).values == {0: 1, 2: 1}


def test_ih_affine(square):
    _, L = square
    assert ih_affine(L).values == {0: 1, 2: 1}
    for d in range(1, 6):
        assert ih_affine(boolean(d)).values == {0: 1}
    assert ih_affine(_point()).values == {0: 1}


def test_ih_compact(square):
    _, L = square
    b = ih_affine(L)
    assert ih_compact(b).values == {6: 1, 4: 1}
    assert ih_compact(ih_affine(_point())).values == {0: 1}
    for d in range(1, 5):
        assert ih_compact(ih_affine(boolean(d))).values == {2 * d: 1}


def test_ih_dual_Y(square):
    _, L = square
    assert ih_dual_Y(L, L.bottom, L.top).values == {0: 1, 2: 1}
    assert ih_dual_Y(L, 2, 2).values == {0: 1}
    ray = face_by_columns(L, {0})
    assert ih_dual_Y(L, ray, L.top).values == {0: 1}


def test_stanley_examples(square):
    _, L = square
    assert verify_stanley_identity(L) == ()
    assert verify_stanley_identity(boolean(2)) == ()
    assert verify_stanley_identity(boolean(1)) == ()


def _random(seed, dmin=1, dmax=5):
    rng = random.Random(seed)
    d = rng.randint(dmin, dmax)
    return build_face_lattice(random_pointed_matrix(rng, d, rng.randint(d, 10)))


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_h_palindromic_and_nonnegative(seed):
    L = _random(seed, 2, 5)
    for P in (L, interval(L, L.of_dim(1)[0], L.top)):
        if P.dim < 1:
            continue
        h = h_polynomial(P)
        h = h + (0,) * (P.dim - len(h))
        assert h == h[::-1] and len(h) == P.dim
        assert min(h) >= 0 and min(g_polynomial(P)) >= 0


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_simplicial_h_matches_classical(seed):
    L = _random(seed, 2, 5)
    simplicial = all(interval(L, L.bottom, c).is_boolean() for c in L.coatoms())
    if not simplicial:
        return
    pdim = L.dim - 1
    f = {i - 1: n for i, n in enumerate(L.f_vector()[:-1])}
    assert h_polynomial(L) == classical_h(f, pdim)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_ih_vanishing_and_invariance(seed):
    rng = random.Random(seed)
    d = rng.randint(1, 5)
    A = random_pointed_matrix(rng, d, rng.randint(d, 10))
    L = build_face_lattice(A)
    b = ih_affine(L)
    assert all(k % 2 == 0 for k in b.values)
    assert all(k < d for k in b.values) and b[0] == 1
    perm = list(range(A.n))
    rng.shuffle(perm)
    assert ih_affine(build_face_lattice(A.permuted(perm))) == b
    assert ih_compact(b)[2 * d] == 1


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6))
def test_stanley_identity_fuzz(seed):
    assert verify_stanley_identity(_random(seed)) == ()


def test_four_cube_betti():
    L = build_face_lattice(cube_cone(4))
    assert verify_stanley_identity(L) == ()
    assert h_polynomial(L)[1] == 16 - 4
    assert ih_affine(build_face_lattice(identity(4))).values == {0: 1}
