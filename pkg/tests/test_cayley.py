import pytest

from albertalg.cayley import CayleyAlgebra, cayley_u_op, reflection
from albertalg.errors import NotSubalgebra
from albertalg.fields import QQ
from albertalg.linalg import mat_vec
from albertalg.randgen import rand_cayley, rng_from_seed

SPLIT = CayleyAlgebra(QQ, (1, 1, 1), label="split")
NEG = CayleyAlgebra(QQ, (-1, -1, -1), label="neg")


@pytest.mark.parametrize("alg", [SPLIT, NEG], ids=["split", "neg"])
def test_composition_laws(alg):
    rng = rng_from_seed(1)
    for _ in range(30):
        a, b, c = (rand_cayley(alg, rng) for _ in range(3))
        assert a * (b * a) == (a * b) * a                    # flexible
        assert ((a * b) * a) * c == a * (b * (a * c))        # Moufang
        assert (a * b).norm() == a.norm() * b.norm()
        assert a * a.conj() == alg.one.scale(a.norm())
        assert a + a.conj() == alg.one.scale(a.trace())


def test_nonassociative_and_noncommutative():
    e1, e2, e4 = SPLIT.basis_elem(1), SPLIT.basis_elem(2), SPLIT.basis_elem(4)
    assert e1 * e2 != e2 * e1
    assert (e1 * e2) * e4 != e1 * (e2 * e4)


def test_negative_params_norm_is_positive_definite_shape():
    # <1, 1, 1, 1, 1, 1, 1, 1> for the (-1,-1,-1) algebra
    assert all(d == QQ.one for d in NEG.norm_diag)


def test_u_op_is_norm_similitude():
    rng = rng_from_seed(2)
    for _ in range(20):
        a = rand_cayley(SPLIT, rng)
        if a.norm().is_zero():
            continue
        mat = cayley_u_op(a)
        x = rand_cayley(SPLIT, rng)
        img = SPLIT.elem(mat_vec(mat, x.coords))
        assert img == a * (x * a)
        assert img.norm() == a.norm() * a.norm() * x.norm()


@pytest.mark.parametrize("alg", [SPLIT, NEG], ids=["split", "neg"])
def test_reflection_fixes_quaternions_negates_complement(alg):
    h = [alg.basis_elem(i) for i in range(4)]
    e = alg.basis_elem(4)
    mat = reflection(h, e)
    for i in range(4):
        assert mat_vec(mat, h[i].coords) == list(h[i].coords)
    for i in range(4, 8):
        b = alg.basis_elem(i)
        assert mat_vec(mat, b.coords) == list((-b).coords)
    # involutive automorphism
    rng = rng_from_seed(3)
    for _ in range(10):
        x, y = rand_cayley(alg, rng), rand_cayley(alg, rng)
        tx = alg.elem(mat_vec(mat, x.coords))
        ty = alg.elem(mat_vec(mat, y.coords))
        assert alg.elem(mat_vec(mat, tx.coords)) == x
        assert alg.elem(mat_vec(mat, (x * y).coords)) == tx * ty


def test_reflection_rejects_bad_subspaces():
    h = [SPLIT.basis_elem(i) for i in (1, 2, 3, 4)]   # misses 1
    with pytest.raises(NotSubalgebra):
        reflection(h, SPLIT.basis_elem(5))
    h = [SPLIT.basis_elem(i) for i in (0, 1, 2, 4)]   # not closed
    with pytest.raises(NotSubalgebra):
        reflection(h, SPLIT.basis_elem(3))
