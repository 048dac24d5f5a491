"""Seeded random data for test suites and the verify command.

Everything takes an explicit random.Random instance; no wall-clock
seeding anywhere. The constructive generators (norm-one elements,
unitary symmetric involutions, non-cyclic companion matrices) produce
elements whose defining properties are verified before returning.
"""

import hashlib
import random

from gmpy2 import is_square, mpq

from . import assoc3
from .assoc3 import CYCLIC
from .errors import ExhaustedCandidates
from .ratio import rat


def rng_from_seed(seed):
    """A Random seeded stably across processes (no hash randomization)."""
    if isinstance(seed, int):
        return random.Random(seed)
    digest = hashlib.sha256(repr(seed).encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def rand_rat(rng, spread=4):
    return rat(rng.randint(-spread, spread), rng.randint(1, 3))


def rand_field_elem(field, rng, spread=4):
    return field.elem([rand_rat(rng, spread) for _ in range(field.degree)])


def rand_nonzero_field_elem(field, rng, spread=4):
    while True:
        x = rand_field_elem(field, rng, spread)
        if not x.is_zero():
            return x


def rand_cayley(c_alg, rng, spread=4):
    return c_alg.elem([rand_rat(rng, spread) for _ in range(8)])


def rand_assoc(d_alg, rng, spread=4):
    return d_alg.from_q_coords(
        [rand_rat(rng, spread) for _ in range(d_alg.dim_over_q)])


def rand_assoc_invertible(d_alg, rng, spread=4):
    while True:
        x = rand_assoc(d_alg, rng, spread)
        if not x.norm().is_zero():
            return x


def rand_albert(alg, rng, spread=3):
    return alg.from_coords([rand_rat(rng, spread) for _ in range(27)])


def rand_albert_invertible(alg, rng, spread=3):
    from .albert import trace_norm
    while True:
        x = rand_albert(alg, rng, spread)
        if not trace_norm(x)[1].is_zero():
            return x


def rand_norm_one_in_l(d_alg, rng, spread=4):
    """sigma(w)/w for random w in L: a norm-one element of the cyclic L."""
    if d_alg.backend != CYCLIC:
        raise ExhaustedCandidates("norm-one L elements need the cyclic "
                                  "backend")
    w = rand_nonzero_field_elem(d_alg.field, rng, spread)
    return d_alg.elem([d_alg.sigma(w) / w])


def rand_psi_pair(d_alg, rng, spread=3):
    """(a, b) invertible with equal reduced norms: b is a conjugate of a."""
    a = rand_assoc_invertible(d_alg, rng, spread)
    g = rand_assoc_invertible(d_alg, rng, spread)
    return a, g * a * assoc3.invert(g)


def rand_unitary(tau, rng, spread=3, tries=200):
    """v with v tau(v) = 1, via the Cayley transform of a skew element."""
    b_alg = tau.parent
    one = b_alg.one
    for _ in range(tries):
        z = rand_assoc(b_alg, rng, spread)
        z = z - tau.apply(z)
        if (one - z).norm().is_zero():
            continue
        v = (one + z) * assoc3.invert(one - z)
        if v * tau.apply(v) == one:
            return v
    raise ExhaustedCandidates("no unitary Cayley transform found")


def rand_symmetric_involution(tau, rng, spread=3, tries=200):
    """s with tau(s) = s, s^2 = 1, N(s) = 1 (conjugated diag(1,-1,-1))."""
    b_alg = tau.parent
    d = b_alg.elem([[1, 0, 0], [0, -1, 0], [0, 0, -1]])
    for _ in range(tries):
        v = rand_unitary(tau, rng, spread)
        s = v * d * assoc3.invert(v)
        if tau.apply(s) == s and s * s == b_alg.one \
                and s.norm() == b_alg.field.one:
            return s
    raise ExhaustedCandidates("no symmetric involution found")


def rand_su_factors(tau, rng, n=2, spread=3):
    """n symmetric involutions whose product lies in SU(B, tau)."""
    if n % 2:
        raise ExhaustedCandidates("need an even number of involutions "
                                  "for a special-unitary product")
    return [rand_symmetric_involution(tau, rng, spread) for _ in range(n)]


def rand_noncyclic_norm_one(m_alg, rng, tries=200):
    """Conjugated companion matrix of an irreducible non-Galois cubic
    X^3 + a X^2 + b X - 1 (so the reduced norm is 1)."""
    from .fields import _is_irreducible
    for _ in range(tries):
        a = rat(rng.randint(-5, 5))
        b = rat(rng.randint(-5, 5))
        # f = X^3 + a X^2 + b X - 1
        if not _is_irreducible([rat(-1), b, a, rat(1)]):
            continue
        p, q, r = a, b, rat(-1)
        disc = (18 * p * q * r - 4 * p ** 3 * r + p * p * q * q
                - 4 * q ** 3 - 27 * r * r)
        dq = mpq(disc)
        if dq >= 0 and is_square(dq.numerator) and is_square(dq.denominator):
            continue
        comp = m_alg.elem([[0, 0, 1], [1, 0, -b], [0, 1, -a]])
        g = rand_assoc_invertible(m_alg, rng)
        return g * comp * assoc3.invert(g)
    raise ExhaustedCandidates("no non-cyclic norm-one companion found")
