"""Factorization of automorphisms and similarities into U-operator words.

Every routine returns either an instruction word together with enough
data to check it, or a commutator witness; all postconditions are exact
matrix or ring identities, verified before returning. Randomized
searches take explicit seeds and fail loudly when retries run out.
"""

import random

from gmpy2 import is_square, mpq

from . import albert, assoc3
from .assoc3 import CYCLIC
from .errors import (CyclicElement, InvariantViolation, NoDecomposition,
                     NormNotOne, NotInvertible, NotIrreducible,
                     NotStabilizing, NotSymmetric, RecoveryFailed,
                     RetriesExhausted, SingularImageOfOne, WrongBackend)
from .fields import hilbert90
from .linalg import kernel
from .ratio import rat
from .strmaps import (InstrWord, PrimitiveGen, ScalarGen, UGen,
                      _is_automorphism, eval_word, make_jp)


class CommutatorWitness:
    """Pairs (i, j) whose commutators j i j^{-1} i^{-1} multiply to target."""

    def __init__(self, pairs, target):
        self.pairs = tuple(pairs)
        self.target = target
        if self.product() != target:
            raise InvariantViolation("witness does not reproduce its target")

    def product(self):
        alg = self.target.parent
        acc = alg.one
        for i, j in self.pairs:
            acc = acc * (j * i * assoc3.invert(j) * assoc3.invert(i))
        return acc


class WedderburnData:
    """A linear factorization f(X) = (X - a2)(X - a1)(X - a0) over D."""

    def __init__(self, a0, a1, a2, c, gamma):
        self.a0 = a0
        self.a1 = a1
        self.a2 = a2
        self.c = c
        self.gamma = gamma


def _slot_elems(alg):
    d = alg.algebra
    return (lambda x: alg.elem(x, d.zero, d.zero),
            lambda y: alg.elem(d.zero, y, d.zero),
            lambda z: alg.elem(d.zero, d.zero, z))


def jp_word(alg, i, j):
    """A 5-generator U-word evaluating to J_p for p = j i j^{-1} i^{-1}."""
    d = alg.algebra
    if i.norm().is_zero() or j.norm().is_zero():
        raise NotInvertible("commutator entries must be invertible")
    s0, s1, s2 = _slot_elems(alg)
    ij_inv = assoc3.invert(i * j)
    return InstrWord(alg, [UGen(s2(d.one)), UGen(s0(ij_inv)),
                           UGen(s0(i)), UGen(s0(j)), UGen(s1(d.one))])


def jp_word_from_witness(alg, witness):
    """Concatenated jp_words evaluating to J_p for the witness target.

    Uses J_{ab} = J_b J_a: the word for the later factor acts first.
    """
    word = InstrWord(alg, [])
    for i, j in witness.pairs:
        word = jp_word(alg, i, j) + word
    return word


def _element_of_l(p):
    """The field value of p when p lies in the distinguished cubic L."""
    d = p.parent
    if d.backend != CYCLIC:
        raise WrongBackend("needs the cyclic presentation of D")
    if not (p.data[1].is_zero() and p.data[2].is_zero()):
        raise WrongBackend("element does not lie in L")
    return p.data[0]


def commutator_decomp_cyclic(p):
    """Witness p = j i j^{-1} i^{-1} for a norm-one p in L.

    sigma acts on L as conjugation by z, so Hilbert 90 gives
    p = q^{-1} sigma(q) = q^{-1} z q z^{-1}: the pair is (z, q^{-1}).
    """
    d = p.parent
    alpha = _element_of_l(p)
    q = hilbert90(alpha, d.sigma)       # alpha q = sigma(q)
    i = d.z_elem()
    j = assoc3.invert(d.elem([q]))
    return CommutatorWitness([(i, j)], p)


def _min_poly_coeffs(a):
    """(t, s, n) with X^3 - t X^2 + s X - n the reduced char poly."""
    t = a.trace()
    s = assoc3.adjoint(a).trace()
    n = a.norm()
    return t, s, n


def _is_rational_square(q):
    q = mpq(q)
    if q < 0:
        return False
    return is_square(q.numerator) and is_square(q.denominator)


def min_poly_is_cyclic(a):
    """k(a) is Galois (cyclic cubic) iff the discriminant is a square."""
    t, s, n = (v.rational_value() for v in _min_poly_coeffs(a))
    p, q, r = -t, s, -n
    disc = (18 * p * q * r - 4 * p ** 3 * r + p * p * q * q
            - 4 * q ** 3 - 27 * r * r)
    return _is_rational_square(disc)


def _random_invertible(d_alg, rng):
    dim = d_alg.dim_over_q
    while True:
        x = d_alg.from_q_coords([rat(rng.randint(-4, 4)) for _ in range(dim)])
        if not x.norm().is_zero():
            return x


def wedderburn_factor(a, seed=0, retries=64):
    """Factor the characteristic polynomial of a into conjugate linear terms.

    Needs k(a) cubic and non-Galois; conjugate roots are found by random
    conjugation plus the right-division substitution rule, and every
    invariant of the factorization is checked before returning.
    """
    d = a.parent
    t, s, n = _min_poly_coeffs(a)
    from .fields import _is_irreducible
    tq, sq, nq = (v.rational_value() for v in _min_poly_coeffs(a))
    if not _is_irreducible([-nq, sq, -tq, rat(1)]):
        raise NotIrreducible("element does not generate a cubic subfield")
    if min_poly_is_cyclic(a):
        raise CyclicElement("k(a) is Galois; Wedderburn path needs a "
                            "non-cyclic element")
    one = d.one
    a0 = a
    # right quotient of f by (X - a0): f(X) = (X^2 + q1 X + q0)(X - a0)
    q1 = a0 - one.scale(t)
    q0 = a0 * a0 - a0.scale(t) + one.scale(s)
    rng = random.Random(seed)
    for _ in range(retries):
        dd = _random_invertible(d, rng)
        b = dd * a0 * assoc3.invert(dd)
        diff = b - a0
        if diff.norm().is_zero():
            continue
        lam = diff * b * assoc3.invert(diff)
        if not (lam * lam + q1 * lam + q0).is_zero():
            continue
        a1 = lam
        c = a0 * a1 - a1 * a0
        if c.is_zero() or c.norm().is_zero():
            continue
        ci = assoc3.invert(c)
        a2 = c * a1 * ci
        # all factorization invariants, exactly
        if a2 + a1 + a0 != one.scale(t):
            continue
        if a2 * a1 + a2 * a0 + a1 * a0 != one.scale(s):
            continue
        if a2 * a1 * a0 != one.scale(n):
            continue
        if c != a1 * a2 - a2 * a1 or c != a2 * a0 - a0 * a2:
            continue
        if c * a0 * ci != a1 or c * a2 * ci != a0:
            continue
        c3 = c * c * c
        gamma = c3.trace() * rat(1, 3)
        if c3 != one.scale(gamma) or gamma.is_zero():
            continue
        return WedderburnData(a0, a1, a2, c, gamma)
    raise RetriesExhausted("no verified factorization in %d tries "
                           "(seed %r)" % (retries, seed))


def cube_commutators(p, seed=0):
    """A commutator witness for p^3, for norm-one p.

    Norm-one p in the distinguished L: one pair via Hilbert 90. Otherwise
    the Wedderburn factorization p2 p1 p0 = 1 gives
    p^3 = (p0^2 p2)(p2^{-1} p0) with both factors explicit commutators.
    """
    d = p.parent
    if p.norm() != d.center.one:
        raise NormNotOne("cube decomposition needs N(p) = 1")
    if p == d.one:
        return CommutatorWitness([], d.one)
    p3 = p * p * p
    if d.backend == CYCLIC and p.data[1].is_zero() and p.data[2].is_zero():
        alpha = p.data[0]
        q = hilbert90(alpha, d.sigma)
        q3 = d.elem([q * q * q])
        return CommutatorWitness([(d.z_elem(), assoc3.invert(q3))], p3)
    w = wedderburn_factor(p, seed=seed)
    return CommutatorWitness([(w.c, w.a0), (w.c, assoc3.invert(w.a2))], p3)


def chi_map(alg, a):
    """Word sending (x, 0, 0) to (a x, 0, 0): R_{n(a)^{-1}} then two U's."""
    if a.norm().is_zero():
        raise NotInvertible("chi needs an invertible parameter")
    s0, s1, s2 = _slot_elems(alg)
    d = alg.algebra
    return InstrWord(alg, [ScalarGen(alg, a.norm().inverse()),
                           UGen(s2(d.one)),
                           UGen(s1(assoc3.adjoint(a)))])


def ia_word(alg, a, witness=None, expand=None):
    """The 7-factor word for I_a, optionally expanded to pure U-generators.

    The J_{n(a) a^{-3}} factor stays a PrimitiveGen unless a commutator
    witness is supplied or derivable (a in the distinguished L); with
    expand=True a missing decomposition raises instead of degrading.
    """
    d = alg.algebra
    n = a.norm()
    if n.is_zero():
        raise NotInvertible("I_a needs an invertible a")
    s0, s1, s2 = _slot_elems(alg)
    p = assoc3.invert(a * a * a).scale(n)
    if witness is not None:
        if witness.target != p:
            raise InvariantViolation("witness target is not n(a) a^{-3}")
        j_part = list(jp_word_from_witness(alg, witness).gens)
    elif p == d.one:
        j_part = []
    else:
        derivable = (d.backend == CYCLIC and p.data[1].is_zero()
                     and p.data[2].is_zero())
        if derivable:
            w = commutator_decomp_cyclic(p)
            j_part = list(jp_word_from_witness(alg, w).gens)
        elif expand:
            raise NoDecomposition("no commutator decomposition of "
                                  "n(a) a^{-3} on the constructive paths")
        else:
            j_part = [PrimitiveGen("Jp", make_jp(alg, p), payload=p)]
    gens = ([UGen(alg.one.scale(n.inverse())), UGen(s2(d.one))]
            + j_part
            + [UGen(s1(a)), UGen(s2(a)), UGen(s0(a)), UGen(s1(d.one))])
    return InstrWord(alg, gens)


def psi_word(alg, a, b, witness=None, expand=None):
    """Word for psi_{a,b} via psi_{a,b} = J_{a b^{-1}} I_a.

    The J factor is decomposed like in ia_word: through a supplied
    commutator witness, through Hilbert 90 when a b^{-1} lies in the
    distinguished L, or kept primitive.
    """
    d = alg.algebra
    if a.norm().is_zero() or b.norm().is_zero():
        raise NotInvertible("psi parameters must be invertible")
    if a.norm() != b.norm():
        from .errors import NormMismatch
        raise NormMismatch("psi needs n(a) = n(b)")
    p = a * assoc3.invert(b)
    if witness is not None:
        if witness.target != p:
            raise InvariantViolation("witness target is not a b^{-1}")
        j_part = list(jp_word_from_witness(alg, witness).gens)
    elif p == d.one:
        j_part = []
    else:
        derivable = (d.backend == CYCLIC and p.data[1].is_zero()
                     and p.data[2].is_zero())
        if derivable:
            w = commutator_decomp_cyclic(p)
            j_part = list(jp_word_from_witness(alg, w).gens)
        elif expand:
            raise NoDecomposition("no commutator decomposition of "
                                  "a b^{-1} on the constructive paths")
        else:
            j_part = [PrimitiveGen("Jp", make_jp(alg, p), payload=p)]
    return InstrWord(alg, j_part) + ia_word(alg, a, expand=expand)


def phi_p_word(alg, s_list):
    """[U_{(s1,0)}, ..., U_{(sn,0)}], evaluating to phi_p for p = s1...sn."""
    b_alg, tau = alg.algebra, alg.tau
    p = b_alg.one
    gens = []
    for s in s_list:
        if tau.apply(s) != s:
            raise NotSymmetric("factors must be tau-symmetric")
        if s.norm().is_zero():
            raise NotInvertible("factors must be invertible")
        gens.append(UGen(alg.elem(s, b_alg.zero)))
        p = p * s
    from .errors import NotSpecialUnitary
    if p * tau.apply(p) != b_alg.one or p.norm() != b_alg.field.one:
        raise NotSpecialUnitary("product must lie in SU(B, tau)")
    return InstrWord(alg, gens)


def reduce_similarity(alg, f):
    """Split a slot-0-stabilizing similarity as eval(chi) . psi_{a,b}.

    Returns (chi, (a, b)); chi = chi_map(c) with c read off f(1,0,0),
    and (a, b) recovered from the leftover automorphism by solving the
    linear system a x = phi0(x) a over the slot-0 basis.
    """
    d = alg.algebra
    s0, s1, s2 = _slot_elems(alg)
    # slot-0 stabilization on the 9 slot-0 basis vectors
    for idx in range(9):
        img = f.apply(alg.basis_elem(idx))
        if not (img.native[1].is_zero() and img.native[2].is_zero()):
            raise NotStabilizing("map does not stabilize the D0 slot")
    img1 = f.apply(s0(d.one))
    c = img1.native[0]
    if c.norm().is_zero():
        raise RecoveryFailed("image of (1,0,0) is singular")
    chi = chi_map(alg, c)
    phi = eval_word(chi).inverse().compose(f)
    if phi.apply(alg.one) != alg.one or not _is_automorphism(phi):
        raise RecoveryFailed("residual map is not an automorphism")
    # recover a from  a x - phi0(x) a = 0  on the slot-0 basis
    basis = d.q_basis()
    rows = []
    for x in basis:
        phi0 = phi.apply(s0(x)).native[0]
        cols = []
        for e in basis:
            diff = e * x - phi0 * e
            cols.append([alg.base_scalar(v) for v in d.q_coords(diff)])
        # equations for this x, one row per coordinate
        for r in range(len(cols[0])):
            rows.append([cols[j][r] for j in range(len(basis))])
    ker = kernel(rows, alg.base)
    a = None
    for vec in ker:
        cand = d.from_q_coords([v.rational_value() for v in vec])
        if not cand.norm().is_zero():
            a = cand
            break
    if a is None:
        raise RecoveryFailed("conjugation parameter not recoverable")
    w = phi.apply(s1(d.one)).native[1]          # w = a b^{-1}
    if w.norm().is_zero():
        raise RecoveryFailed("slot-1 readout is singular")
    b = assoc3.invert(w) * a
    from .strmaps import make_psi
    psi = make_psi(alg, a, b, verify=False)
    if eval_word(chi).compose(psi) != f:
        raise RecoveryFailed("recovered parameters do not reproduce the map")
    return chi, (a, b)


def reduce_to_isometry(alg, f):
    """Left-multiply by [R_{N(f(1))^{-1}}, U_{f(1)}] to normalize N(g(1))=1."""
    a = f.apply(alg.one)
    n = albert.trace_norm(a)[1]
    if n.is_zero():
        raise SingularImageOfOne("norm of f(1) vanishes")
    chi = InstrWord(alg, [ScalarGen(alg, n.inverse()), UGen(a)])
    g = eval_word(chi).compose(f)
    if albert.trace_norm(g.apply(alg.one))[1] != alg.base.one:
        raise InvariantViolation("normalization failed to reach norm one")
    return chi, g
