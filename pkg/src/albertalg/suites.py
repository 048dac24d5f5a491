"""Named verification suites over a workspace.

Each suite is a function (workspace, seed, count) -> report dict with one
entry per property checked; every comparison is exact rational equality.
Suites pick their algebras out of the workspace by construction kind and
fall back to the shipped instances when a kind is absent.
"""

from . import albert, assoc3, innerfact, strmaps
from .albert import FIRST, REDUCED, SECOND, jmul, newton_norm, \
    trace_norm, u_apply, u_op
from .assoc3 import CYCLIC, MATRIX3
from .cayley import reflection
from .errors import UnknownSuite
from .fixpoint import fixed_subspace, has_fixed_vector_in_A0
from .hexagon import HexElem, relation_audit
from .linalg import mat_vec
from .randgen import (rand_albert, rand_albert_invertible, rand_assoc,
                      rand_assoc_invertible, rand_cayley,
                      rand_noncyclic_norm_one, rand_norm_one_in_l,
                      rand_psi_pair, rand_rat, rand_su_factors,
                      rng_from_seed)
from .strmaps import PrimitiveGen, eval_word, make_ia, make_jp, \
    make_phi, make_psi


def _alberts(ws, kind=None, backend=None):
    from .workspace import builtin_workspace
    found = [a for a in ws.albert.values()
             if (kind is None or a.kind == kind)
             and (backend is None or
                  (a.kind == FIRST and a.algebra.backend == backend))]
    if found:
        return found
    bw = builtin_workspace()
    return [a for a in bw.albert.values()
            if (kind is None or a.kind == kind)
            and (backend is None or
                 (a.kind == FIRST and a.algebra.backend == backend))]


def _cayleys(ws):
    from .workspace import builtin_workspace
    return list((ws.cayley or builtin_workspace().cayley).values())


def _run(report, name, cases, fn):
    ok = all(fn() for _ in range(cases))
    report.append({"name": name, "passed": ok, "cases": cases})


def _rand_hermitian(alg, rng):
    a0 = alg.algebra.zero
    for h in alg._herm_basis:
        a0 = a0 + h.scale(alg.base_scalar(rand_rat(rng, 3)))
    return a0


# -- albert-identities -----------------------------------------------------

def suite_albert_identities(ws, seed=0, count=20):
    report = []
    for alg in _alberts(ws):
        rng = rng_from_seed((seed, alg.label))
        tag = alg.label

        def jordan():
            x, y = rand_albert(alg, rng), rand_albert(alg, rng)
            x2 = jmul(x, x)
            return (jmul(x, y) == jmul(y, x)
                    and jmul(jmul(x2, y), x) == jmul(x2, jmul(y, x))
                    and jmul(alg.one, x) == x)

        def adjoint_ids():
            x = rand_albert(alg, rng)
            n = trace_norm(x)[1]
            sh = albert.adjoint(x)
            return (jmul(x, sh) == alg.one.scale(n)
                    and albert.adjoint(sh) == x.scale(n)
                    and albert.cross(x, x) == sh + sh)

        def norms_agree():
            x = rand_albert(alg, rng)
            return newton_norm(x) == trace_norm(x)[1]

        def similitude():
            x = rand_albert_invertible(alg, rng)
            y = rand_albert(alg, rng)
            nx, ny = trace_norm(x)[1], trace_norm(y)[1]
            return trace_norm(u_apply(x, y))[1] == nx * nx * ny

        def fundamental():
            x = rand_albert_invertible(alg, rng)
            y = rand_albert_invertible(alg, rng)
            ux, uy = u_op(x), u_op(y)
            z = alg.from_coords(mat_vec(ux.mat, y.coords))
            return u_op(z) == ux.compose(uy).compose(ux)

        _run(report, "%s: jordan identity, commutativity, unit" % tag,
             count, jordan)
        _run(report, "%s: x x# = N(x) 1, x## = N(x) x, x x x = 2 x#" % tag,
             count, adjoint_ids)
        _run(report, "%s: newton norm equals closed-form norm" % tag,
             count, norms_agree)
        _run(report, "%s: N(U_x y) = N(x)^2 N(y)" % tag, count, similitude)
        _run(report, "%s: U_{U_x y} = U_x U_y U_x" % tag,
             max(1, count // 4), fundamental)
    return report


# -- uop-closed-forms ------------------------------------------------------

def suite_uop_closed_forms(ws, seed=0, count=25):
    report = []
    for alg in _alberts(ws, kind=FIRST):
        rng = rng_from_seed((seed, alg.label))
        d = alg.algebra
        mu, mu_inv = alg.mu, alg.mu_inv
        tag = alg.label

        def slot0():
            a = rand_assoc_invertible(d, rng)
            x = rand_albert(alg, rng)
            dd, e, f = x.native
            img = u_apply(alg.elem(a, d.zero, d.zero), x)
            sharp = assoc3.adjoint(a)
            return img == alg.elem(a * dd * a, sharp * e, f * sharp)

        def slot1():
            b = rand_assoc_invertible(d, rng)
            x = rand_albert(alg, rng)
            dd, e, f = x.native
            img = u_apply(alg.elem(d.zero, b, d.zero), x)
            sharp = assoc3.adjoint(b)
            return img == alg.elem((e * sharp).scale(mu), b * f * b,
                                   (sharp * dd).scale(mu))

        def slot2():
            c = rand_assoc_invertible(d, rng)
            x = rand_albert(alg, rng)
            dd, e, f = x.native
            img = u_apply(alg.elem(d.zero, d.zero, c), x)
            sharp = assoc3.adjoint(c)
            return img == alg.elem((sharp * f).scale(mu_inv),
                                   (dd * sharp).scale(mu_inv), c * e * c)

        _run(report, "%s: U_{(a,0,0)} = (ada, a#e, fa#)" % tag, count, slot0)
        _run(report, "%s: U_{(0,b,0)} = (mu eb#, bfb, mu b#d)" % tag,
             count, slot1)
        _run(report, "%s: U_{(0,0,c)} = (c#f/mu, dc#/mu, cec)" % tag,
             count, slot2)
    for alg in _alberts(ws, kind=SECOND):
        rng = rng_from_seed((seed, alg.label))
        b_alg = alg.algebra
        tag = alg.label

        def second():
            a = _rand_hermitian(alg, rng)
            if a.norm().is_zero():
                return True
            x = rand_albert(alg, rng)
            c, dd = x.native
            img = u_apply(alg.elem(a, b_alg.zero), x)
            return img == alg.elem(a * c * a, assoc3.adjoint(a) * dd)

        _run(report, "%s: U_{(a,0)} = (aca, a#d)" % tag, count, second)
    return report


# -- factorization -----------------------------------------------------------

def suite_factorization(ws, seed=0, count=10):
    report = []
    firsts = (_alberts(ws, kind=FIRST, backend=MATRIX3)
              + _alberts(ws, kind=FIRST, backend=CYCLIC))
    for alg in firsts:
        rng = rng_from_seed((seed, alg.label))
        d = alg.algebra
        tag = alg.label

        def jp():
            i = rand_assoc_invertible(d, rng)
            j = rand_assoc_invertible(d, rng)
            p = (j * i * assoc3.invert(j)) * assoc3.invert(i)
            word = innerfact.jp_word(alg, i, j)
            return eval_word(word) == make_jp(alg, p)

        def ia():
            a = rand_assoc_invertible(d, rng)
            word = innerfact.ia_word(alg, a)
            return eval_word(word) == make_ia(alg, a)

        def psi():
            a, b = rand_psi_pair(d, rng)
            word = innerfact.psi_word(alg, a, b)
            return eval_word(word) == make_psi(alg, a, b)

        def chi():
            a = rand_assoc_invertible(d, rng)
            word = innerfact.chi_map(alg, a)
            op = eval_word(word)
            x = rand_assoc(d, rng)
            lhs = op.apply(alg.elem(x, d.zero, d.zero))
            return lhs == alg.elem(a * x, d.zero, d.zero)

        def reduce_roundtrip():
            a, b = rand_psi_pair(d, rng)
            c = rand_assoc_invertible(d, rng)
            f = eval_word(innerfact.chi_map(alg, c)).compose(
                make_psi(alg, a, b, verify=False))
            chi_w, (ra, rb) = innerfact.reduce_similarity(alg, f)
            psi = make_psi(alg, ra, rb, verify=False)
            return eval_word(chi_w).compose(psi) == f

        def isometry():
            a = rand_assoc_invertible(d, rng)
            f = eval_word(innerfact.ia_word(alg, a)).compose(
                strmaps.make_rt(alg, rand_rat(rng, 3) + 5))
            _, g = innerfact.reduce_to_isometry(alg, f)
            return trace_norm(g.apply(alg.one))[1] == alg.base.one

        _run(report, "%s: jp_word evaluates to J_{jij^-1i^-1}" % tag,
             count, jp)
        _run(report, "%s: ia_word evaluates to I_a" % tag, count, ia)
        _run(report, "%s: psi_word evaluates to psi_{a,b}" % tag,
             max(1, count // 2), psi)
        _run(report, "%s: chi_map sends (x,0,0) to (ax,0,0)" % tag,
             count, chi)
        _run(report, "%s: reduce_similarity roundtrip" % tag,
             max(1, count // 2), reduce_roundtrip)
        _run(report, "%s: reduce_to_isometry reaches N(g(1)) = 1" % tag,
             max(1, count // 2), isometry)

        if d.backend == CYCLIC:
            def ia_expanded():
                w = None
                while w is None or w.is_zero():
                    from .randgen import rand_field_elem
                    w = rand_field_elem(d.field, rng)
                a = d.elem([w])
                word = innerfact.ia_word(alg, a, expand=True)
                pure = all(not isinstance(g, PrimitiveGen)
                           for g in word.gens)
                return pure and eval_word(word) == make_ia(alg, a)

            _run(report, "%s: expanded all-U ia_word for a in L" % tag,
                 count, ia_expanded)

    for alg in _alberts(ws, kind=FIRST, backend=MATRIX3):
        rng = rng_from_seed((seed, alg.label, "wedderburn"))
        d = alg.algebra
        tag = alg.label

        def wedderburn():
            p = rand_noncyclic_norm_one(d, rng)
            innerfact.wedderburn_factor(p, seed=rng.randint(0, 10 ** 6))
            w = innerfact.cube_commutators(p, seed=rng.randint(0, 10 ** 6))
            return w.product() == p * p * p

        _run(report, "%s: wedderburn factorization and cube commutators"
             % tag, max(1, count // 2), wedderburn)

    for alg in _alberts(ws, kind=SECOND):
        rng = rng_from_seed((seed, alg.label))
        tau = alg.tau
        tag = alg.label

        def phi():
            s1, s2 = rand_su_factors(tau, rng)
            word = innerfact.phi_p_word(alg, [s1, s2])
            return eval_word(word) == make_phi(alg, s1 * s2)

        _run(report, "%s: phi_p_word evaluates to phi_p" % tag,
             max(1, count // 2), phi)
    return report


# -- hexagon -----------------------------------------------------------------

def suite_hexagon(ws, seed=0, count=20):
    algs = _alberts(ws, kind=REDUCED) or _alberts(ws)
    alg = algs[0]
    report = [{"name": "%s: %s" % (alg.label, r["relation"]),
               "passed": r["passed"], "cases": r["cases"]}
              for r in relation_audit(alg, seed=seed, count=count)]
    rng = rng_from_seed((seed, alg.label, "assoc"))

    def rand_hex():
        parts = []
        for pos in range(1, 7):
            if pos % 2:
                parts.append(rand_albert(alg, rng, spread=2))
            else:
                parts.append(rand_rat(rng, 3))
        return HexElem.from_parts(alg, *parts)

    def assoc_case():
        g, h, k = rand_hex(), rand_hex(), rand_hex()
        return (g * h) * k == g * (h * k)

    def inverse_case():
        g = rand_hex()
        return (g * g.inverse()).is_identity()

    _run(report, "%s: hex_mul associativity" % alg.label, count, assoc_case)
    _run(report, "%s: g g^-1 = 1" % alg.label,
         max(1, count // 2), inverse_case)
    return report


# -- fixedpoint ---------------------------------------------------------------

def suite_fixedpoint(ws, seed=0, count=10):
    report = []
    for alg in _alberts(ws, kind=FIRST):
        rng = rng_from_seed((seed, alg.label))
        d = alg.algebra
        tag = alg.label

        def psi_fixed():
            a, b = rand_psi_pair(d, rng)
            return has_fixed_vector_in_A0(make_psi(alg, a, b, verify=False))

        def ia_fixed():
            a = rand_assoc_invertible(d, rng)
            return has_fixed_vector_in_A0(make_ia(alg, a, verify=False))

        def jp_fixed():
            i = rand_assoc_invertible(d, rng)
            j = rand_assoc_invertible(d, rng)
            p = (j * i * assoc3.invert(j)) * assoc3.invert(i)
            return has_fixed_vector_in_A0(make_jp(alg, p, verify=False))

        _run(report, "%s: psi_{a,b} has a trace-zero fixed vector" % tag,
             count, psi_fixed)
        _run(report, "%s: I_a has a trace-zero fixed vector" % tag,
             count, ia_fixed)
        _run(report, "%s: J_p has a trace-zero fixed vector" % tag,
             count, jp_fixed)

        if d.backend == CYCLIC:
            def jp_slot0():
                p = rand_norm_one_in_l(d, rng)
                if p == d.one:
                    return True
                sub = fixed_subspace(make_jp(alg, p, verify=False))
                return sub.dim == 9 and sub.closed

            def psi_kp():
                p = rand_norm_one_in_l(d, rng)
                if p == d.one:
                    return True
                sub = fixed_subspace(make_psi(alg, p, d.one, verify=False))
                return sub.dim == 3 and sub.closed

            _run(report, "%s: fixed space of J_p is the 9-dim slot 0" % tag,
                 max(1, count // 2), jp_slot0)
            _run(report,
                 "%s: fixed space of psi_{p,1} is the 3-dim k(p)" % tag,
                 max(1, count // 2), psi_kp)

    for alg in _alberts(ws, kind=SECOND):
        rng = rng_from_seed((seed, alg.label))
        tau = alg.tau
        tag = alg.label

        def phi_fixed():
            s1, s2 = rand_su_factors(tau, rng)
            return has_fixed_vector_in_A0(
                make_phi(alg, s1 * s2, verify=False))

        _run(report, "%s: phi_p has a trace-zero fixed vector" % tag,
             max(1, count // 2), phi_fixed)
    return report


# -- composition -------------------------------------------------------------

def suite_composition(ws, seed=0, count=25):
    report = []
    for c_alg in _cayleys(ws):
        rng = rng_from_seed((seed, c_alg.label))
        tag = c_alg.label

        def flexible():
            a, b = rand_cayley(c_alg, rng), rand_cayley(c_alg, rng)
            return a * (b * a) == (a * b) * a

        def moufang():
            a, b, c = (rand_cayley(c_alg, rng) for _ in range(3))
            return ((a * b) * a) * c == a * (b * (a * c))

        def norm_mult():
            a, b = rand_cayley(c_alg, rng), rand_cayley(c_alg, rng)
            return (a * b).norm() == a.norm() * b.norm()

        def conj_ids():
            a = rand_cayley(c_alg, rng)
            return (a * a.conj() == c_alg.one.scale(a.norm())
                    and a.conj().conj() == a)

        _run(report, "%s: flexible law a(ba) = (ab)a" % tag, count, flexible)
        _run(report, "%s: moufang identity ((ab)a)c = a(b(ac))" % tag,
             count, moufang)
        _run(report, "%s: n(ab) = n(a) n(b)" % tag, count, norm_mult)
        _run(report, "%s: a conj(a) = n(a) 1" % tag, count, conj_ids)

        def refl():
            h = [c_alg.basis_elem(i) for i in range(4)]
            mat = reflection(h, c_alg.basis_elem(4))
            for i in range(4):
                if mat_vec(mat, h[i].coords) != list(h[i].coords):
                    return False
            for i in range(4, 8):
                e = c_alg.basis_elem(i)
                if mat_vec(mat, e.coords) != list((-e).coords):
                    return False
            return True

        _run(report, "%s: reflection fixing the quaternion subalgebra "
             "is an automorphism with tau^2 = id" % tag, 1, refl)
    return report


SUITES = {
    "albert-identities": suite_albert_identities,
    "uop-closed-forms": suite_uop_closed_forms,
    "factorization": suite_factorization,
    "hexagon": suite_hexagon,
    "fixedpoint": suite_fixedpoint,
    "composition": suite_composition,
}


def run_suite(name, ws=None, seed=0, count=None):
    """Run one named suite; the report says exactly what was checked."""
    if name not in SUITES:
        raise UnknownSuite("unknown suite %r; choose from %s"
                           % (name, ", ".join(sorted(SUITES))))
    if ws is None:
        from .workspace import builtin_workspace
        ws = builtin_workspace()
    kwargs = {"seed": seed}
    if count is not None:
        kwargs["count"] = count
    cases = SUITES[name](ws, **kwargs)
    return {"suite": name, "seed": seed,
            "count": count, "passed": all(c["passed"] for c in cases),
            "cases": cases}
