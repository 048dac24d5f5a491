import pytest

from albertalg.errors import NotAutomorphism
from albertalg.fixpoint import (Subspace, element_fixed_set, fixed_subspace,
                                has_fixed_vector_in_A0, subalgebra_closure,
                                trace_zero)
from albertalg.randgen import (rand_albert, rand_assoc_invertible,
                               rand_norm_one_in_l, rand_psi_pair,
                               rand_su_factors, rng_from_seed)
from albertalg.strmaps import make_ia, make_jp, make_phi, make_psi, make_rt
from albertalg.ratio import rat


def test_trace_zero_dimension(jm, jd, j2, jr):
    for alg in (jm, jd, j2, jr):
        assert trace_zero(alg).dim == 26


def test_fixed_space_of_identity(jm):
    from albertalg.albert import LinOp
    sub = fixed_subspace(LinOp.identity(jm))
    assert sub.dim == 27
    assert sub.closed


def test_jp_fixed_space_is_slot_zero(jd):
    d = jd.algebra
    rng = rng_from_seed(1)
    for _ in range(3):
        p = rand_norm_one_in_l(d, rng)
        if p == d.one:
            continue
        sub = fixed_subspace(make_jp(jd, p, verify=False))
        assert sub.dim == 9
        assert sub.closed
        assert sub.contains(jd.elem(d.elem([p.data[0]]), d.zero, d.zero))
        assert not sub.contains(jd.elem(d.zero, d.one, d.zero))


def test_psi_p1_fixed_space_is_kp(jd):
    d = jd.algebra
    rng = rng_from_seed(2)
    for _ in range(3):
        p = rand_norm_one_in_l(d, rng)
        if p == d.one:
            continue
        sub = fixed_subspace(make_psi(jd, p, d.one, verify=False))
        assert sub.dim == 3
        assert sub.closed


def test_fixed_vector_in_a0_for_constructors(jm, j2):
    d = jm.algebra
    rng = rng_from_seed(3)
    a, b = rand_psi_pair(d, rng)
    assert has_fixed_vector_in_A0(make_psi(jm, a, b, verify=False))
    assert has_fixed_vector_in_A0(make_ia(jm, a, verify=False))
    s1, s2 = rand_su_factors(j2.tau, rng)
    assert has_fixed_vector_in_A0(make_phi(j2, s1 * s2, verify=False))


def test_fixed_vector_guard_rejects_non_automorphisms(jm):
    with pytest.raises(NotAutomorphism):
        has_fixed_vector_in_A0(make_rt(jm, rat(2)))


def test_subspace_contains_and_coords(jm):
    rng = rng_from_seed(4)
    xs = [rand_albert(jm, rng) for _ in range(4)]
    sub = Subspace(jm, [list(x.coords) for x in xs])
    for x in xs:
        c = sub.coords_in_basis(x)
        assert c is not None
        rebuilt = jm.zero
        for ci, b in zip(c, sub.basis_elems()):
            rebuilt = rebuilt + b.scale(ci)
        assert rebuilt == x


def test_subspace_json_roundtrip(jm):
    sub = trace_zero(jm)
    clone = Subspace.from_json(jm, sub.to_json())
    assert clone.dim == sub.dim
    assert clone.rows == sub.rows


def test_subalgebra_closure(jd):
    d = jd.algebra
    # one slot-0 element of L generates the 3-dimensional k(p)
    gen = jd.elem(d.elem([d.field.gen()]), d.zero, d.zero)
    sub = subalgebra_closure([gen])
    assert sub.dim == 3
    assert sub.closed
    assert sub.is_subalgebra()
    # a slot-1 element pushes out of slot 0
    rng = rng_from_seed(5)
    gen2 = jd.elem(d.zero, d.one, d.zero)
    sub2 = subalgebra_closure([gen, gen2])
    assert sub2.dim > 3
    assert sub2.is_subalgebra()


def test_element_fixed_set(jm):
    d = jm.algebra
    rng = rng_from_seed(6)
    a = rand_assoc_invertible(d, rng)
    f = make_ia(jm, a, verify=False)
    sub = element_fixed_set(jm, [f])
    assert sub.dim == fixed_subspace(f).dim
    both = element_fixed_set(jm, [f, make_ia(jm, a * a, verify=False)])
    assert both.dim <= sub.dim
    assert element_fixed_set(jm, []).dim == 27
