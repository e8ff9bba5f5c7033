import itertools
from random import Random

import pytest

from gl2images.modmat import (
    Mat2,
    ModulusMismatchError,
    NonInvertibleError,
    fiber,
    mat_inv,
    mat_mul,
    reduce_mod,
)
from gl2images.subgroups import gl2_group, gl2_order


def rand_mat(rng, n):
    return Mat2(n, rng.randrange(n), rng.randrange(n),
                rng.randrange(n), rng.randrange(n))


def rand_invertible(rng, n):
    while True:
        m = rand_mat(rng, n)
        if m.is_invertible():
            return m


def brute_force_inverse(m: Mat2):
    """Independent oracle: scan all matrices for a two-sided inverse."""
    n = m.n
    ident = Mat2.identity(n)
    for a, b, c, d in itertools.product(range(n), repeat=4):
        cand = Mat2(n, a, b, c, d)
        if mat_mul(m, cand) == ident and mat_mul(cand, m) == ident:
            return cand
    return None


def test_identity_is_neutral():
    rng = Random(1)
    ident = Mat2.identity(27)
    for _ in range(50):
        m = rand_mat(rng, 27)
        assert mat_mul(ident, m) == m
        assert mat_mul(m, ident) == m


def test_product_mod3_example():
    m = Mat2(3, 0, 2, 1, 0)
    assert mat_mul(m, m) == Mat2(3, 2, 0, 0, 2)


def test_inverse_against_brute_force_mod9():
    rng = Random(2)
    for _ in range(8):
        m = rand_invertible(rng, 9)
        expect = brute_force_inverse(m)
        assert expect is not None
        assert mat_inv(m) == expect
        assert mat_mul(m, mat_inv(m)) == Mat2.identity(9)


def test_inverse_examples():
    assert mat_inv(Mat2.identity(27)) == Mat2.identity(27)
    assert mat_inv(Mat2(3, 1, 1, 0, 1)) == Mat2(3, 1, 2, 0, 1)
    with pytest.raises(NonInvertibleError):
        mat_inv(Mat2(9, 0, 3, 1, 0))


def test_reduce_examples():
    assert reduce_mod(Mat2(27, 1, 9, 0, 1), 9) == Mat2.identity(9)
    m = Mat2(27, 5, 11, 3, 20)
    assert reduce_mod(m, 27) == m
    with pytest.raises(ValueError):
        reduce_mod(m, 4)


def test_reduce_commutes_with_det():
    rng = Random(3)
    for _ in range(100):
        m = rand_mat(rng, 81)
        assert reduce_mod(m, 27).det() == m.det() % 27


def test_fiber_of_identity():
    assert fiber(Mat2.identity(3), 3) == [Mat2.identity(3)]
    lifts = fiber(Mat2.identity(3), 9)
    assert len(lifts) == 81
    assert all(m.is_invertible() for m in lifts)


def test_fibers_partition_gl2():
    # invertibility mod 9 is decided mod 3, so the fibers over GL2(Z/3Z)
    # partition GL2(Z/9Z); the order formula is the independent oracle
    total = sum(len(fiber(m, 9)) for m in gl2_group(3).mats())
    assert total == 48 * 81 == gl2_order(9)


def test_mul_associative_random():
    for n in (3, 9, 27):
        rng = Random(100 + n)
        for _ in range(4000):
            a, b, c = (rand_mat(rng, n) for _ in range(3))
            assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))


def test_inv_is_involution():
    rng = Random(5)
    for n in (3, 9, 27):
        for _ in range(50):
            m = rand_invertible(rng, n)
            assert mat_inv(mat_inv(m)) == m


def test_reduce_is_multiplicative():
    rng = Random(6)
    for _ in range(200):
        a, b = rand_mat(rng, 81), rand_mat(rng, 81)
        assert reduce_mod(mat_mul(a, b), 27) == mat_mul(
            reduce_mod(a, 27), reduce_mod(b, 27)
        )


def test_modulus_mismatch():
    with pytest.raises(ModulusMismatchError):
        mat_mul(Mat2.identity(3), Mat2.identity(9))


def test_parse_and_text_form():
    m = Mat2.parse(" [ 1, 2 ,0,26 ] ", 27)
    assert m == Mat2(27, 1, 2, 0, 26)
    assert str(m) == "[1,2,0,26]"
    with pytest.raises(ValueError):
        Mat2.parse("[1,2,3]", 9)


def test_entries_normalized():
    m = Mat2(9, -1, 10, 18, 4)
    assert m.entries() == (8, 1, 0, 4)
    with pytest.raises(ValueError):
        Mat2(1, 0, 0, 0, 0)
