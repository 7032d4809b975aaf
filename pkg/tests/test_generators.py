import itertools
import random
from fractions import Fraction

import pytest

from conftest import face_by_columns
from toric_weights import build_face_lattice
from toric_weights.catalog import cube_cone, identity, two_f_one
from toric_weights.cone import GeneratorMatrix, in_cone
from toric_weights.errors import BoundTooSmall, MissingPrimitive, ScopeError
from toric_weights.generators import (
    dependency_dimension,
    distinguished_columns,
    euler_functional,
    euler_operators,
    f_r_values,
    filtration_generators,
    interior_test,
    operators_redundant,
    visible,
)


def _u(*cols, n=4):
    u = [0] * n
    for c in cols:
        u[c - 1] += 1
    return tuple(u)


def _sets(levels):
    return {lvl.level: {m.u for m in lvl.monomials} for lvl in levels}


def test_interior_test(square):
    A, L = square
    assert interior_test(L, A, (2, 1, 1), L.top)
    ray = face_by_columns(L, {0})
    assert interior_test(L, A, A.columns[0], ray)
    assert not interior_test(L, A, A.columns[0], L.top)
    assert interior_test(L, A, (0, 0, 0), L.bottom)
    assert not interior_test(L, A, (Fraction(1, 2), 0, 0), ray)


def test_distinguished_columns(square, hexagon):
    A, L = square
    assert sorted(distinguished_columns(A, L)) == [0, 1, 2, 3]
    I = identity(3)
    assert sorted(distinguished_columns(I, build_face_lattice(I))) == [0, 1, 2]
    H, HL = hexagon
    assert sorted(distinguished_columns(H, HL)) == list(range(6))


def test_missing_primitive():
    A = GeneratorMatrix.from_columns([(1, 0), (1, 2), (0, 1)])
    B = GeneratorMatrix.from_columns([(2, 0), (0, 1), (1, 0), (1, 1)])
    assert distinguished_columns(A, build_face_lattice(A)) == [0, 2]
    C = GeneratorMatrix.from_columns([(2, 0), (0, 1), (1, 1)], strict=False)
    with pytest.raises(MissingPrimitive):
        distinguished_columns(C, build_face_lattice(C))
    assert sorted(distinguished_columns(B, build_face_lattice(B))) == [1, 2]


def test_visibility(square):
    A, L = square
    # columns 1 and 4 are opposite corners of the square
    assert not visible(A, L, 0, 3)
    assert visible(A, L, 0, 1) and visible(A, L, 0, 2)
    assert visible(A, L, 0, 0)


def test_f_r_values(square, hexagon):
    A, L = square
    assert f_r_values(A, L, 0) == [1, 0, 0, 0]
    I = identity(3)
    IL = build_face_lattice(I)
    assert [f_r_values(I, IL, r) for r in range(3)] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    # a column 2 b_1 + b_2 on the facet spanned by b_1, b_2
    B = GeneratorMatrix.from_columns([(1, 0, 0), (0, 1, 0), (0, 0, 1), (2, 1, 0)])
    BL = build_face_lattice(B)
    r = distinguished_columns(B, BL).index(0)
    assert f_r_values(B, BL, r)[3] == 2
    H, HL = hexagon
    for r in range(6):
        vals = f_r_values(H, HL, r)
        b = distinguished_columns(H, HL)[r]
        assert vals[b] == 1 and vals[6] == 0


def test_euler_operators(square, hexagon):
    A, L = square
    ops = euler_operators(A, L)
    assert [op.render() for op in ops] == ["x1*d1", "x2*d2", "x3*d3", "x4*d4"]
    assert dependency_dimension(A, L) == 3
    I = identity(3)
    assert dependency_dimension(I, build_face_lattice(I)) == 3
    H, HL = hexagon
    assert len(euler_operators(H, HL)) == 6
    assert dependency_dimension(H, HL) == 3


def test_functional_agrees(square, hexagon):
    # E_r is linear and matches F_r on every column where F_r is nonzero
    for A, L in (square, hexagon):
        for r in range(len(L.of_dim(1))):
            E = euler_functional(A, L, r)
            for j, v in enumerate(f_r_values(A, L, r)):
                if v:
                    assert sum(e * x for e, x in zip(E, A.columns[j])) == v


def test_generators_2f1(square):
    A, L = square
    levels = filtration_generators(A, L)
    got = _sets(levels)
    w3 = {_u(1, 4), _u(2, 3)}
    w4 = w3 | {_u(1, 2), _u(2, 4), _u(4, 3), _u(3, 1)}
    w5 = {_u(j) for j in range(1, 5)}
    assert got[3] == w3
    assert got[4] == w4
    assert got[5] == w5
    assert got[6] == {_u()}
    assert [op.render() for op in levels[1].operators] == ["x1*d1", "x2*d2", "x3*d3", "x4*d4"]
    assert all(not lvl.operators for i, lvl in enumerate(levels) if i != 1)


def test_generators_identity_small():
    I2 = identity(2)
    got = _sets(filtration_generators(I2, build_face_lattice(I2)))
    assert got == {2: {(1, 1)}, 3: {(1, 0), (0, 1)}, 4: {(0, 0)}}
    I1 = identity(1)
    got = _sets(filtration_generators(I1, build_face_lattice(I1)))
    assert got == {1: {(1,)}, 2: {(0,)}}


def test_simplicial_operators_redundant():
    I = identity(3)
    L = build_face_lattice(I)
    levels = filtration_generators(I, L)
    assert levels[1].operators_redundant and operators_redundant(I, L)
    A = two_f_one()
    assert not operators_redundant(A, build_face_lattice(A))


def _divides(w, v):
    return all(a <= b for a, b in zip(w, v))


def test_downward_consistency(square, hexagon):
    for A, L in (square, hexagon):
        levels = filtration_generators(A, L)
        for lo, hi in zip(levels, levels[1:]):
            for m in lo.monomials:
                assert any(_divides(g.u, m.u) for g in hi.monomials)


def test_interior_closure(square):
    # every interior degree up to the bound is reached from any interior seed
    # by adding columns, and every generator's degree is interior
    A, L = square
    w3 = filtration_generators(A, L, degree_bound=4)[0]
    assert all(interior_test(L, A, m.degree, L.top) for m in w3.monomials)
    interior = set()
    for total in range(5):
        for combo in itertools.combinations_with_replacement(range(A.n), total):
            a = tuple(sum(A.columns[j][i] for j in combo) for i in range(3))
            if interior_test(L, A, a, L.top):
                interior.add(a)
    for seed in (m.degree for m in w3.monomials):
        reached = {seed}
        frontier = [seed]
        while frontier:
            a = frontier.pop()
            for c in A.columns:
                b = tuple(x + y for x, y in zip(a, c))
                if b[0] <= 4 and b not in reached:
                    reached.add(b)
                    frontier.append(b)
        # the first coordinate of an A-degree is its total degree
        assert reached == interior
        assert all(in_cone(A, a) for a in reached)


def test_generator_degrees_match_levels(hexagon):
    A, L = hexagon
    for lvl in filtration_generators(A, L):
        for m in lvl.monomials:
            assert m.face_dim >= A.d - (lvl.level - A.d)


def test_bound_too_small(square):
    A, L = square
    with pytest.raises(BoundTooSmall):
        filtration_generators(A, L, degree_bound=1)


def test_scope_error():
    A = cube_cone(3)
    with pytest.raises(ScopeError):
        filtration_generators(A, build_face_lattice(A))


def test_simplicial_d4_allowed():
    I = identity(4)
    levels = filtration_generators(I, build_face_lattice(I))
    assert [len(l.monomials) for l in levels] == [1, 4, 6, 4, 1]


def test_random_simplicial_d3_generators():
    rng = random.Random(5)
    for _ in range(5):
        perm = list(range(3))
        rng.shuffle(perm)
        I = identity(3).permuted(perm)
        L = build_face_lattice(I)
        assert dependency_dimension(I, L) == 3
        assert len(filtration_generators(I, L)[0].monomials) == 1
