"""Acceptance gate: one check per shipped claim, exact rational equality,
zero tolerance. Each test prints a single PASS/FAIL line for its criterion.
"""

import time

from albertalg import assoc3
from albertalg.albert import newton_norm, trace_norm, u_apply, u_op
from albertalg.cayley import reflection
from albertalg.fields import CYCLIC7
from albertalg.fixpoint import fixed_subspace, has_fixed_vector_in_A0
from albertalg.hexagon import HexElem, relation_audit
from albertalg.innerfact import (chi_map, cube_commutators, ia_word,
                                 jp_word, phi_p_word, reduce_similarity,
                                 reduce_to_isometry, wedderburn_factor)
from albertalg.linalg import mat_vec
from albertalg.randgen import (rand_albert, rand_albert_invertible,
                               rand_assoc, rand_assoc_invertible,
                               rand_field_elem, rand_noncyclic_norm_one,
                               rand_norm_one_in_l, rand_psi_pair, rand_rat,
                               rand_su_factors, rng_from_seed)
from albertalg.strmaps import (InstrWord, ScalarGen, UGen, eval_word,
                               make_ia, make_jp, make_phi, make_psi)


def _verdict(num, ok, text):
    print("\ncriterion %2d %s - %s" % (num, "PASS" if ok else "FAIL", text))
    assert ok, "criterion %d failed: %s" % (num, text)


def _warm(alg):
    alg.mult_table()
    alg.cross_table()
    alg.gram()
    alg.r_basis_ops()


def test_criterion_01_u_operator_closed_forms(jm, jd):
    for alg in (jm, jd):
        _warm(alg)
    start = time.monotonic()
    ok = True
    for alg in (jm, jd):
        d = alg.algebra
        mu, mu_inv = alg.mu, alg.mu_inv
        rng = rng_from_seed((1, alg.label))
        for _ in range(100):
            a = rand_assoc_invertible(d, rng)
            b = rand_assoc_invertible(d, rng)
            c = rand_assoc_invertible(d, rng)
            x = rand_albert(alg, rng)
            dd, e, f = x.native
            ok = ok and u_apply(alg.elem(a, d.zero, d.zero), x) == alg.elem(
                a * dd * a, assoc3.adjoint(a) * e, f * assoc3.adjoint(a))
            sb = assoc3.adjoint(b)
            ok = ok and u_apply(alg.elem(d.zero, b, d.zero), x) == alg.elem(
                (e * sb).scale(mu), b * f * b, (sb * dd).scale(mu))
            sc = assoc3.adjoint(c)
            ok = ok and u_apply(alg.elem(d.zero, d.zero, c), x) == alg.elem(
                (sc * f).scale(mu_inv), (dd * sc).scale(mu_inv), c * e * c)
            if not ok:
                break
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 30
    _verdict(1, ok, "U closed forms on the three slots, 100 instances "
             "each over Matrix3(Q) and the cyclic algebra (%.1fs)" % elapsed)


def test_criterion_02_similitude_and_fundamental_identity(jm, j2, jr, jrc):
    ok = True
    for alg in (jm, j2, jr, jrc):
        _warm(alg)
        rng = rng_from_seed((2, alg.label))
        for _ in range(100):
            x = rand_albert_invertible(alg, rng)
            y = rand_albert_invertible(alg, rng)
            nx, ny = trace_norm(x)[1], trace_norm(y)[1]
            if trace_norm(u_apply(x, y))[1] != nx * nx * ny:
                ok = False
                break
            ux, uy = u_op(x), u_op(y)
            z = alg.from_coords(mat_vec(ux.mat, y.coords))
            if u_op(z) != ux.compose(uy).compose(ux):
                ok = False
                break
    _verdict(2, ok, "N(U_x y) = N(x)^2 N(y) and U_{U_x y} = U_x U_y U_x, "
             "100 pairs per construction")


def test_criterion_03_norm_oracle_agreement(jm, jd, j2, jr, jrc):
    ok = True
    for alg in (jm, jd, j2, jr, jrc):
        rng = rng_from_seed((3, alg.label))
        for _ in range(200):
            x = rand_albert(alg, rng)
            if newton_norm(x) != trace_norm(x)[1]:
                ok = False
                break
    _verdict(3, ok, "newton_norm equals the construction closed-form norm, "
             "200 elements per construction")


def test_criterion_04_jp_word(jm, jd):
    ok = True
    for alg in (jm, jd):
        d = alg.algebra
        rng = rng_from_seed((4, alg.label))
        for _ in range(25):
            i = rand_assoc_invertible(d, rng)
            j = rand_assoc_invertible(d, rng)
            p = (j * i * assoc3.invert(j)) * assoc3.invert(i)
            word = jp_word(alg, i, j)
            if len(word) != 5 or \
                    eval_word(word) != make_jp(alg, p, verify=False):
                ok = False
                break
    _verdict(4, ok, "5-generator jp_word equals J_{jij^-1i^-1}, "
             "25 pairs per backend")


def test_criterion_05_ia_word(jd):
    d = jd.algebra
    ok = True
    rng = rng_from_seed(5)
    for _ in range(25):
        a = rand_assoc_invertible(d, rng)
        word = ia_word(jd, a)
        if eval_word(word) != make_ia(jd, a, verify=False):
            ok = False
            break
    for _ in range(25):
        w = rand_field_elem(CYCLIC7, rng)
        if w.is_zero():
            w = CYCLIC7.one
        a = d.elem([w])
        word = ia_word(jd, a, expand=True)
        pure = all(isinstance(g, (UGen, ScalarGen)) for g in word.gens)
        if not pure or eval_word(word) != make_ia(jd, a, verify=False):
            ok = False
            break
    _verdict(5, ok, "ia_word equals I_a: 25 unexpanded random a and "
             "25 fully expanded a in L via Hilbert 90")


def test_criterion_06_wedderburn(jm):
    d = jm.algebra
    ok = True
    rng = rng_from_seed(6)
    for _ in range(10):
        p = rand_noncyclic_norm_one(d, rng)
        data = wedderburn_factor(p, seed=rng.randint(0, 10 ** 6))
        t, s, n = p.trace(), assoc3.adjoint(p).trace(), p.norm()
        one = d.one
        invs = (data.a2 + data.a1 + data.a0 == one.scale(t)
                and data.a2 * data.a1 + data.a2 * data.a0
                + data.a1 * data.a0 == one.scale(s)
                and data.a2 * data.a1 * data.a0 == one.scale(n)
                and data.c * data.a0 == data.a1 * data.c
                and data.c ** 3 == one.scale(data.gamma))
        w = cube_commutators(p, seed=rng.randint(0, 10 ** 6))
        if not invs or w.product() != p * p * p:
            ok = False
            break
    _verdict(6, ok, "wedderburn_factor passes all five invariants and "
             "cube_commutators reproduces p^3, 10 non-cyclic norm-one "
             "elements")


def test_criterion_07_reduce_similarity_and_isometry(jd, jm):
    d = jd.algebra
    ok = True
    rng = rng_from_seed(7)
    for _ in range(25):
        a, b = rand_psi_pair(d, rng)
        c = rand_assoc_invertible(d, rng)
        f = eval_word(chi_map(jd, c)).compose(
            make_psi(jd, a, b, verify=False))
        chi, (ra, rb) = reduce_similarity(jd, f)
        if eval_word(chi).compose(make_psi(jd, ra, rb, verify=False)) != f:
            ok = False
            break
    rng2 = rng_from_seed((7, "isometry"))
    for _ in range(25):
        x = rand_albert_invertible(jm, rng2)
        t = rand_rat(rng2, 3) + 5
        f = eval_word(InstrWord(jm, [UGen(x), ScalarGen(jm, t)]))
        _, g = reduce_to_isometry(jm, f)
        if trace_norm(g.apply(jm.one))[1] != jm.base.one:
            ok = False
            break
    _verdict(7, ok, "chi_map/reduce_similarity roundtrip on 25 cases and "
             "reduce_to_isometry reaches N(g(1)) = 1 on 25 word-built "
             "similarities")


def test_criterion_08_second_construction(j2):
    tau, b_alg = j2.tau, j2.algebra
    ok = True
    rng = rng_from_seed(8)
    for _ in range(25):
        s1, s2 = rand_su_factors(tau, rng)
        word = phi_p_word(j2, [s1, s2])
        if eval_word(word) != make_phi(j2, s1 * s2, verify=False):
            ok = False
            break
    herm = tau.hermitian_basis()
    for _ in range(100):
        a = b_alg.zero
        for h in herm:
            a = a + h.scale(j2.base_scalar(rand_rat(rng, 3)))
        if a.norm().is_zero():
            continue
        x = rand_albert(j2, rng)
        c, dd = x.native
        if u_apply(j2.elem(a, b_alg.zero), x) != \
                j2.elem(a * c * a, assoc3.adjoint(a) * dd):
            ok = False
            break
    _verdict(8, ok, "phi_p_word equals phi_p on 25 admissible symmetric "
             "factorizations and U_{(a,0)} = (aca, a#d) on 100 instances")


def test_criterion_09_fixed_point_theorem(jm, jd, j2):
    ok = True
    checked = 0

    def check(f):
        nonlocal ok, checked
        checked += 1
        if not has_fixed_vector_in_A0(f):
            ok = False

    for alg, counts in ((jm, (20, 15, 15)), (jd, (10, 10, 10))):
        d = alg.algebra
        rng = rng_from_seed((9, alg.label))
        n_psi, n_ia, n_jp = counts
        for _ in range(n_psi):
            a, b = rand_psi_pair(d, rng)
            check(make_psi(alg, a, b, verify=False))
        for _ in range(n_ia):
            check(make_ia(alg, rand_assoc_invertible(d, rng), verify=False))
        for _ in range(n_jp):
            i = rand_assoc_invertible(d, rng)
            j = rand_assoc_invertible(d, rng)
            p = (j * i * assoc3.invert(j)) * assoc3.invert(i)
            check(make_jp(alg, p, verify=False))
    rng = rng_from_seed((9, j2.label))
    for _ in range(20):
        s1, s2 = rand_su_factors(j2.tau, rng)
        check(make_phi(j2, s1 * s2, verify=False))
    ok = ok and checked == 100

    d = jd.algebra
    rng = rng_from_seed((9, "dims"))
    for _ in range(5):
        p = rand_norm_one_in_l(d, rng)
        if p == d.one:
            continue
        if fixed_subspace(make_jp(jd, p, verify=False)).dim != 9:
            ok = False
        if fixed_subspace(make_psi(jd, p, d.one, verify=False)).dim != 3:
            ok = False
    _verdict(9, ok, "det(phi|_A0 - id) = 0 for 100 automorphisms from the "
             "psi/I/J/phi families; fixed spaces of J_p and psi_{p,1} have "
             "dimensions 9 and 3 on the cyclic instance")


def test_criterion_10_hexagon(jr):
    _warm(jr)
    start = time.monotonic()
    report = relation_audit(jr, seed=10, count=50)
    ok = all(entry["passed"] for entry in report)
    rng = rng_from_seed(10)

    def rand_hex():
        parts = []
        for pos in range(1, 7):
            if pos % 2:
                parts.append(rand_albert(jr, rng, spread=2))
            else:
                parts.append(rand_rat(rng, 3))
        return HexElem.from_parts(jr, *parts)

    for _ in range(200):
        g, h, k = rand_hex(), rand_hex(), rand_hex()
        if (g * h) * k != g * (h * k):
            ok = False
            break
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 120
    _verdict(10, ok, "hexagon relation audit, 50 instantiations per "
             "relation, and hex_mul associativity on 200 triples "
             "(%.1fs)" % elapsed)


def test_criterion_11_composition(ws):
    ok = True
    for c_alg in ws.cayley.values():
        rng = rng_from_seed((11, c_alg.label))
        for _ in range(100):
            x = c_alg.elem([rand_rat(rng) for _ in range(8)])
            y = c_alg.elem([rand_rat(rng) for _ in range(8)])
            z = c_alg.elem([rand_rat(rng) for _ in range(8)])
            if not (x * (y * x) == (x * y) * x
                    and ((x * y) * x) * z == x * (y * (x * z))
                    and (x * y).norm() == x.norm() * y.norm()):
                ok = False
                break
        h = [c_alg.basis_elem(i) for i in range(4)]
        mat = reflection(h, c_alg.basis_elem(4))
        for i in range(8):
            e = c_alg.basis_elem(i)
            expect = e if i < 4 else -e
            if mat_vec(mat, e.coords) != list(expect.coords):
                ok = False
    _verdict(11, ok, "flexible law, Moufang identity, norm "
             "multiplicativity on 100 pairs; quaternion reflection is an "
             "involutive automorphism")


def test_criterion_12_sampled_anisotropy(jd):
    d = jd.algebra
    rng = rng_from_seed(12)
    ok = True
    for _ in range(10 ** 4):
        x = rand_assoc(d, rng)
        if all(c == 0 for c in d.q_coords(x)):
            continue
        if x.norm() == 0:
            ok = False
            break
    for _ in range(10 ** 4):
        x = rand_albert(jd, rng)
        if all(c.is_zero() for c in x.coords):
            continue
        if trace_norm(x)[1].is_zero():
            ok = False
            break
    _verdict(12, ok, "N(x) != 0 on 10^4 sampled nonzero elements of D and "
             "of J(D,3): consistent with division (not a proof)")
