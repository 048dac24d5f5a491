import pytest

from albertalg import assoc3
from albertalg.assoc3 import (CYCLIC, MATRIX3, Assoc3Algebra,
                              UnitaryInvolution, reduced_norm_trace,
                              unitary_data)
from albertalg.errors import NotSymmetric, WrongBackend
from albertalg.fields import CYCLIC7, GAUSS, QQ
from albertalg.linalg import det
from albertalg.randgen import (rand_assoc, rand_assoc_invertible,
                               rand_symmetric_involution, rand_unitary,
                               rng_from_seed)
from albertalg.ratio import rat

M3 = Assoc3Algebra(MATRIX3, field=QQ, label="m3")
B3 = Assoc3Algebra(MATRIX3, field=GAUSS, label="b3")
D7 = Assoc3Algebra(CYCLIC, field=CYCLIC7, sigma=CYCLIC7.automorphisms[1],
                   gamma=rat(2), label="d7")


@pytest.mark.parametrize("alg", [M3, B3, D7], ids=["m3", "b3", "d7"])
def test_associative_ring_laws(alg):
    rng = rng_from_seed(1)
    for _ in range(15):
        a, b, c = (rand_assoc(alg, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * alg.one == a and alg.one * a == a


def test_matrix_norm_trace_match_det_trace():
    rng = rng_from_seed(2)
    for _ in range(15):
        a = rand_assoc(M3, rng)
        n, t = reduced_norm_trace(a)
        assert n == det(a.data)
        assert t == a.data[0][0] + a.data[1][1] + a.data[2][2]


@pytest.mark.parametrize("alg", [M3, B3, D7], ids=["m3", "b3", "d7"])
def test_norm_multiplicative_trace_linear(alg):
    rng = rng_from_seed(3)
    for _ in range(15):
        a, b = rand_assoc(alg, rng), rand_assoc(alg, rng)
        assert (a * b).norm() == a.norm() * b.norm()
        assert (a + b).trace() == a.trace() + b.trace()
        assert (a * b).trace() == (b * a).trace()


@pytest.mark.parametrize("alg", [M3, B3, D7], ids=["m3", "b3", "d7"])
def test_adjoint_and_cayley_hamilton(alg):
    rng = rng_from_seed(4)
    for _ in range(15):
        a = rand_assoc(alg, rng)
        sharp = assoc3.adjoint(a)
        assert a * sharp == alg.one.scale(a.norm())
        assert sharp * a == alg.one.scale(a.norm())
        # X^3 - t X^2 + s X - n annihilates a
        t = a.trace()
        s = sharp.trace()
        n = a.norm()
        assert (a * a * a - (a * a).scale(t) + a.scale(s)
                - alg.one.scale(n)).is_zero()


def test_cyclic_relations():
    z = D7.z_elem()
    ell = D7.elem([CYCLIC7.gen()])
    sigma = D7.sigma
    assert z * ell == D7.elem([CYCLIC7.zero, sigma(CYCLIC7.gen())])
    assert z * z * z == D7.one.scale(rat(2))


def test_cyclic_norm_stays_rational():
    rng = rng_from_seed(5)
    for _ in range(15):
        a = rand_assoc(D7, rng)
        n = a.norm()
        t = a.trace()
        assert n * 0 == 0 and t * 0 == 0      # plain rationals


def test_invert_roundtrip():
    rng = rng_from_seed(6)
    for alg in (M3, B3, D7):
        for _ in range(10):
            a = rand_assoc_invertible(alg, rng)
            assert a * assoc3.invert(a) == alg.one


def test_regular_embedding_needs_cyclic():
    with pytest.raises(WrongBackend):
        M3.regular_embedding(M3.one)


def test_unitary_involution_laws():
    tau = UnitaryInvolution(B3)
    rng = rng_from_seed(7)
    for _ in range(10):
        a, b = rand_assoc(B3, rng), rand_assoc(B3, rng)
        assert tau.apply(tau.apply(a)) == a
        assert tau.apply(a * b) == tau.apply(b) * tau.apply(a)
    assert len(tau.hermitian_basis()) == 9


def test_involution_twist_requires_symmetric():
    tau = UnitaryInvolution(B3)
    rng = rng_from_seed(8)
    u = rand_symmetric_involution(tau, rng)
    tau2 = tau.twist(u)
    a = rand_assoc(B3, rng)
    assert tau2.apply(tau2.apply(a)) == a
    skew = B3.one.scale(GAUSS.gen())        # tau(i 1) = -i 1
    with pytest.raises(NotSymmetric):
        tau.twist(skew)


def test_unitary_data_flags():
    tau = UnitaryInvolution(B3)
    rng = rng_from_seed(9)
    s = rand_symmetric_involution(tau, rng)
    d = unitary_data(B3, tau, s)
    assert d["is_symmetric"] and d["in_sigma_prime"]
    v = rand_unitary(tau, rng)
    d2 = unitary_data(B3, tau, v)
    assert set(d2) == {"is_symmetric", "in_sigma_prime"}


def test_cyclic_norm_of_l_element_is_galois_norm():
    from albertalg.fields import galois_norm_trace
    rng = rng_from_seed(10)
    from albertalg.randgen import rand_field_elem
    for _ in range(10):
        w = rand_field_elem(CYCLIC7, rng)
        n, _ = galois_norm_trace(w)
        assert D7.elem([w]).norm() == n.rational_value()
