"""Degree-3 associative coordinate algebras.

Two backends: 3x3 matrices over a number field, and cyclic algebras
(L/k, sigma, gamma) stored as triples (l0, l1, l2) meaning
l0 + l1 z + l2 z^2 with z l = sigma(l) z and z^3 = gamma.

Reduced trace and norm live in the centre; for the cyclic backend they
are computed through the regular embedding (left multiplication on the
algebra as a right L-space) and checked to descend to the rationals.
"""

from .errors import (InvariantViolation, MixedParents, NotInCenter,
                     NotInvertible, NotSymmetric, WrongBackend)
from .fields import QQ, FieldElem
from .linalg import det as mat_det
from .linalg import kernel
from .ratio import is_rat, rat

HALF = rat(1, 2)

MATRIX3 = "matrix3"
CYCLIC = "cyclic"


class Assoc3Algebra:

    def __init__(self, backend, field=None, sigma=None, gamma=None, label=""):
        self.backend = backend
        if backend == MATRIX3:
            self.field = field
            self.center = field
            self.dim_over_q = 9 * field.degree
        elif backend == CYCLIC:
            if field.degree != 3 or not field.is_galois:
                raise InvariantViolation("cyclic backend needs a cyclic "
                                         "cubic field")
            if sigma is None or sigma.is_identity or sigma.order() != 3:
                raise InvariantViolation("sigma must generate the Galois "
                                         "group")
            self.field = field
            self.center = QQ
            self.sigma = sigma
            self.sigma_powers = (field.identity_automorphism(), sigma,
                                 sigma.compose(sigma))
            self.gamma = rat(gamma)
            if self.gamma == 0:
                raise InvariantViolation("gamma must be nonzero")
            self.dim_over_q = 3 * field.degree
        else:
            raise WrongBackend("unknown backend %r" % (backend,))
        self.label = label or "%s(%s)" % (backend, self.field.label)
        self.zero = self._make_zero()
        self.one = self.scalar(1)

    # -- constructors ------------------------------------------------

    def _entry(self, v):
        if isinstance(v, FieldElem):
            if v.parent is not self.field:
                raise MixedParents("entry from a different field")
            return v
        return self.field.from_rational(rat(v))

    def _make_zero(self):
        z = self.field.zero
        if self.backend == MATRIX3:
            return AssocElem(self, ((z, z, z),) * 3)
        return AssocElem(self, (z, z, z))

    def elem(self, data):
        if self.backend == MATRIX3:
            if len(data) != 3 or any(len(r) != 3 for r in data):
                raise InvariantViolation("need a 3x3 matrix")
            return AssocElem(self, tuple(
                tuple(self._entry(v) for v in row) for row in data))
        data = [self._entry(v) for v in data]
        data += [self.field.zero] * (3 - len(data))
        return AssocElem(self, tuple(data))

    def scalar(self, c):
        if isinstance(c, FieldElem) and c.parent is not self.field:
            c = c.rational_value()
        if not isinstance(c, FieldElem):
            c = self.field.from_rational(rat(c))
        if self.backend == MATRIX3:
            z = self.field.zero
            return AssocElem(self, ((c, z, z), (z, c, z), (z, z, c)))
        return AssocElem(self, (c, self.field.zero, self.field.zero))

    def z_elem(self):
        if self.backend != CYCLIC:
            raise WrongBackend("z lives in the cyclic backend")
        return AssocElem(self, (self.field.zero, self.field.one,
                                self.field.zero))

    def matrix_unit(self, i, j):
        if self.backend != MATRIX3:
            raise WrongBackend("matrix units need the matrix backend")
        rows = [[self.field.zero] * 3 for _ in range(3)]
        rows[i][j] = self.field.one
        return AssocElem(self, tuple(tuple(r) for r in rows))

    def q_basis(self):
        """Rational basis: matrix units times field basis, in scan order."""
        out = []
        d = self.field.degree
        gens = [self.field.elem([0] * p + [1]) for p in range(d)]
        if self.backend == MATRIX3:
            for i in range(3):
                for j in range(3):
                    for g in gens:
                        rows = [[self.field.zero] * 3 for _ in range(3)]
                        rows[i][j] = g
                        out.append(AssocElem(self, tuple(
                            tuple(r) for r in rows)))
        else:
            for slot in range(3):
                for g in gens:
                    data = [self.field.zero] * 3
                    data[slot] = g
                    out.append(AssocElem(self, tuple(data)))
        return out

    def q_coords(self, x):
        """Flatten to rational coordinates matching q_basis order."""
        if x.parent is not self:
            raise MixedParents("element of a different algebra")
        if self.backend == MATRIX3:
            flat = [v for row in x.data for v in row]
        else:
            flat = list(x.data)
        return [c for v in flat for c in v.coeffs]

    def from_q_coords(self, coords):
        d = self.field.degree
        chunks = [self.field.elem(list(coords[i:i + d]))
                  for i in range(0, len(coords), d)]
        if self.backend == MATRIX3:
            return AssocElem(self, tuple(
                tuple(chunks[3 * i:3 * i + 3]) for i in range(3)))
        return AssocElem(self, tuple(chunks))

    # -- products ----------------------------------------------------

    def _mul(self, a, b):
        if self.backend == MATRIX3:
            out = []
            for i in range(3):
                row = []
                for j in range(3):
                    acc = a[i][0] * b[0][j]
                    for k in (1, 2):
                        acc = acc + a[i][k] * b[k][j]
                    row.append(acc)
                out.append(tuple(row))
            return tuple(out)
        # (sum a_i z^i)(sum b_j z^j); z^i b_j = sigma^i(b_j) z^i
        out = [self.field.zero] * 3
        for i in range(3):
            if a[i].is_zero():
                continue
            si = self.sigma_powers[i]
            for j in range(3):
                if b[j].is_zero():
                    continue
                term = a[i] * si(b[j])
                m = i + j
                if m >= 3:
                    m -= 3
                    term = self.gamma * term
                out[m] = out[m] + term
        return tuple(out)

    def regular_embedding(self, x):
        """3x3 matrix over L of left multiplication by x on basis 1, z, z^2.

        Cyclic backend only; the matrix of y -> xy with D viewed as a right
        L-space via z^m * c for c in L.
        """
        if self.backend != CYCLIC:
            raise WrongBackend("regular embedding is for the cyclic backend")
        m = [[self.field.zero] * 3 for _ in range(3)]
        for i in range(3):
            ai = x.data[i]
            if ai.is_zero():
                continue
            for j in range(3):
                r = (i + j) % 3
                # a_i z^(i+j) = z^(i+j) sigma^{-(i+j)}(a_i)
                val = self.sigma_powers[(3 - (i + j) % 3) % 3](ai)
                if i + j >= 3:
                    val = self.gamma * val
                m[r][j] = m[r][j] + val
        return m

    def descriptor(self):
        from .ratio import rat_str
        if self.backend == MATRIX3:
            return {"backend": MATRIX3, "field": self.field.label}
        return {"backend": CYCLIC, "L": self.field.label,
                "sigma": [rat_str(c) for c in self.sigma.image.coeffs],
                "gamma": rat_str(self.gamma)}

    def __repr__(self):
        return "Assoc3Algebra(%s)" % self.label


class AssocElem:

    __slots__ = ("parent", "data")

    def __init__(self, parent, data):
        self.parent = parent
        self.data = data

    def _check(self, other):
        if not isinstance(other, AssocElem):
            raise TypeError("expected AssocElem")
        if other.parent is not self.parent:
            raise MixedParents("elements of different algebras")

    def _map2(self, other, op):
        if self.parent.backend == MATRIX3:
            return AssocElem(self.parent, tuple(
                tuple(op(x, y) for x, y in zip(ra, rb))
                for ra, rb in zip(self.data, other.data)))
        return AssocElem(self.parent, tuple(
            op(x, y) for x, y in zip(self.data, other.data)))

    def __add__(self, other):
        self._check(other)
        return self._map2(other, lambda x, y: x + y)

    def __sub__(self, other):
        self._check(other)
        return self._map2(other, lambda x, y: x - y)

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, AssocElem):
            self._check(other)
            return AssocElem(self.parent, self.parent._mul(
                self.data, other.data))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n):
        if n < 0:
            return invert(self) ** (-n)
        acc = self.parent.one
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def scale(self, c):
        if is_rat(c):
            c = self.parent.field.from_rational(rat(c))
        elif isinstance(c, FieldElem) and c.parent is QQ \
                and c.parent is not self.parent.field:
            c = self.parent.field.from_rational(c.rational_value())
        if self.parent.backend == MATRIX3:
            return AssocElem(self.parent, tuple(
                tuple(c * v for v in row) for row in self.data))
        return AssocElem(self.parent, tuple(c * v for v in self.data))

    def is_zero(self):
        if self.parent.backend == MATRIX3:
            return all(v.is_zero() for row in self.data for v in row)
        return all(v.is_zero() for v in self.data)

    def __eq__(self, other):
        return (isinstance(other, AssocElem) and other.parent is self.parent
                and other.data == self.data)

    def __hash__(self):
        return hash((id(self.parent), self.data))

    def trace(self):
        return reduced_norm_trace(self)[1]

    def norm(self):
        return reduced_norm_trace(self)[0]

    def __repr__(self):
        if self.parent.backend == MATRIX3:
            return "Mat3(%s)" % ("; ".join(
                ", ".join(repr(v) for v in row) for row in self.data))
        return "Cyc(%s)" % (", ".join(repr(v) for v in self.data))


def reduced_norm_trace(a):
    """(reduced norm, reduced trace), both in the centre."""
    alg = a.parent
    if alg.backend == MATRIX3:
        t = a.data[0][0] + a.data[1][1] + a.data[2][2]
        n = mat_det([list(row) for row in a.data])
        return n, t
    m = alg.regular_embedding(a)
    t = m[0][0] + m[1][1] + m[2][2]
    n = mat_det(m)
    if not (t.is_rational() and n.is_rational()):
        raise NotInCenter("reduced trace/norm did not descend")
    return (QQ.from_rational(n.rational_value()),
            QQ.from_rational(t.rational_value()))


def tilde(a):
    """~a = (t(a) - a)/2."""
    return (a.parent.scalar(a.trace()) - a).scale(HALF)


def cross(a, b):
    """a x b = 2 a.b - t(a)b - t(b)a + (t(a)t(b) - t(a.b)) 1."""
    ta, tb = a.trace(), b.trace()
    ab = (a * b + b * a).scale(HALF)
    tab = ab.trace()
    out = ab.scale(2) - b.scale(ta) - a.scale(tb)
    return out + a.parent.scalar(ta * tb - tab)


def adjoint(a):
    """a# = a^2 - t(a)a + s(a) with s(a) = (t(a)^2 - t(a^2))/2."""
    t = a.trace()
    sq = a * a
    s = (t * t - sq.trace()) * HALF
    return sq - a.scale(t) + a.parent.scalar(s)


def adjoint_cross_tilde(a, b):
    return adjoint(a), cross(a, b), tilde(a)


def invert(a):
    n = a.norm()
    if n.is_zero():
        raise NotInvertible("reduced norm is zero")
    return adjoint(a).scale(n.inverse())


class UnitaryInvolution:
    """tau(x) = g conj(x)^t g^{-1} on 3x3 matrices over a quadratic field.

    conj is the nontrivial automorphism of K; g must be hermitian and
    invertible. The involution laws are verified on construction.
    """

    def __init__(self, parent, g=None, conj=None):
        if parent.backend != MATRIX3:
            raise WrongBackend("unitary involutions need the matrix backend")
        k_field = parent.field
        if conj is None:
            nontrivial = [s for s in k_field.automorphisms
                          if not s.is_identity]
            if k_field.degree != 2 or len(nontrivial) != 1:
                raise InvariantViolation("need a quadratic field with its "
                                         "conjugation declared")
            conj = nontrivial[0]
        self.parent = parent
        self.conj = conj
        if g is None:
            g = parent.one
        if isinstance(g, AssocElem):
            if g.parent is not parent:
                raise MixedParents("twist matrix from a different algebra")
        else:
            g = parent.elem(g)
        if self._conj_transpose(g) != g:
            raise NotSymmetric("twist matrix must be hermitian")
        self.g = g
        self.g_inv = invert(g)
        # involution laws on the rational basis
        basis = parent.q_basis()
        for x in basis:
            if self.apply(self.apply(x)) != x:
                raise InvariantViolation("tau^2 is not the identity")
        for x in basis[:6]:
            for y in basis[6:12]:
                if self.apply(x * y) != self.apply(y) * self.apply(x):
                    raise InvariantViolation("tau is not an anti-"
                                             "automorphism")
        lam = parent.scalar(conj.field.gen())
        if self.apply(lam) != parent.scalar(conj(conj.field.gen())):
            raise InvariantViolation("tau does not restrict to the "
                                     "conjugation on the centre")

    def _conj_transpose(self, x):
        c = self.conj
        return AssocElem(self.parent, tuple(
            tuple(c(x.data[j][i]) for j in range(3)) for i in range(3)))

    def apply(self, x):
        if x.parent is not self.parent:
            raise MixedParents("element of a different algebra")
        return self.g * self._conj_transpose(x) * self.g_inv

    def twist(self, u):
        """Int(u) composed with tau; u must be tau-symmetric."""
        if self.apply(u) != u:
            raise NotSymmetric("twist element must be tau-symmetric")
        return UnitaryInvolution(self.parent, u * self.g, self.conj)

    def hermitian_basis(self):
        """Rational basis of H(B, tau) = {x : tau(x) = x}."""
        alg = self.parent
        basis = alg.q_basis()
        rows = []
        for b in basis:
            diff = self.apply(b) - b
            rows.append([QQ.from_rational(c) for c in alg.q_coords(diff)])
        # kernel of (tau - id) acting on columns of the coordinate matrix
        ker = kernel([list(col) for col in zip(*rows)], QQ)
        out = []
        for vec in ker:
            out.append(alg.from_q_coords([v.rational_value() for v in vec]))
        return out


def unitary_data(b_alg, tau, x):
    """Symmetry and rational-norm flags used by the second construction."""
    n = x.norm()
    return {"is_symmetric": tau.apply(x) == x,
            "in_sigma_prime": (not n.is_zero()) and n.is_rational()}
