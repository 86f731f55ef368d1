from fractions import Fraction

import pytest

import lattice_equiv as le


def test_diagonal_triangle_pair_modes():
    p = le.Polytope([[0, 0], [9, 0], [0, 10]])
    q = le.Polytope([[0, 0], [6, 0], [0, 15]])
    w = le.equivalent(p, q, "affine")
    assert w is not None
    assert all(isinstance(x, Fraction) for row in w["matrix"] for x in row)
    assert le.equivalent(p, q, "unimodular") is None
    assert le.equivalent(p, q, "det-one")["determinant"] == 1


def test_unit_disk_census():
    c = le.census(1)
    assert (c["H"], c["K"], c["A"]) == (9, 3, 2)


def test_canonical_triangle_invariant_under_shear():
    t = le.Polytope([[0, 0], [3, 0], [1, 2]])
    s = le.Polytope([[x + 5 * y, y] for x, y in t.vertices], hull=True)
    assert le.canonical_triangle(t) == le.canonical_triangle(s)
    assert le.normalized_volume(t) == 6


def test_error_kind():
    with pytest.raises(le.LatticeError) as info:
        le.Polytope([[0, 0], [1, 1], [2, 2]])
    assert isinstance(info.value, ValueError)
    assert info.value.kind


def test_big_integers_round_trip():
    big = 10**30
    p = le.Polytope([[0, 0], [big, 0], [0, big]])
    assert le.normalized_volume(p) == big * big
