import random

from albertalg.fields import GAUSS, QQ
from albertalg.linalg import (det, identity_matrix, inverse, kernel,
                              mat_mul, mat_vec, rank, rref, solve)
from albertalg.ratio import rat


def _rand_mat(field, rng, n, m=None):
    m = m or n
    return [[field.elem([rat(rng.randint(-4, 4))
                         for _ in range(field.degree)])
             for _ in range(m)] for _ in range(n)]


def test_rref_known_matrix():
    a = [[QQ.from_rational(rat(v)) for v in row]
         for row in [[1, 2, 3], [2, 4, 6], [1, 0, 1]]]
    red, pivots = rref(a)
    assert pivots == [0, 1]
    assert rank(a) == 2


def test_kernel_vectors_annihilate():
    rng = random.Random(3)
    for field in (QQ, GAUSS):
        for _ in range(10):
            a = _rand_mat(field, rng, 3, 5)
            for v in kernel(a, field):
                assert all(x.is_zero() for x in mat_vec(a, v))
            assert rank(a) + len(kernel(a, field)) == 5


def test_inverse_and_det():
    rng = random.Random(4)
    for field in (QQ, GAUSS):
        found = 0
        while found < 10:
            a = _rand_mat(field, rng, 4)
            if det(a).is_zero():
                continue
            found += 1
            ai = inverse(a, field)
            ident = identity_matrix(field, 4)
            assert mat_mul(a, ai) == ident
            assert mat_mul(ai, a) == ident


def test_det_multiplicative():
    rng = random.Random(5)
    for _ in range(10):
        a = _rand_mat(QQ, rng, 4)
        b = _rand_mat(QQ, rng, 4)
        assert det(mat_mul(a, b)) == det(a) * det(b)


def test_solve_reproduces_rhs():
    rng = random.Random(6)
    found = 0
    while found < 10:
        a = _rand_mat(GAUSS, rng, 3)
        if det(a).is_zero():
            continue
        found += 1
        b = [GAUSS.elem([rat(rng.randint(-3, 3)), rat(rng.randint(-3, 3))])
             for _ in range(3)]
        x = solve(a, b, GAUSS)
        assert mat_vec(a, x) == b
