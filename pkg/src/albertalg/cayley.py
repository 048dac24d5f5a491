"""Octonion (Cayley) algebras by Cayley-Dickson doubling.

Basis order is the doubling basis 1, e1, e2, e1e2, e3, e1e3, e2e3,
(e1e2)e3; the doubling product at each level is
(u, v)(w, z) = (uw + g * conj(z) v, z u + v conj(w)) with parameter g.
"""

from .errors import InvariantViolation, MixedParents, NotSubalgebra
from .fields import FieldElem
from .linalg import inverse as mat_inverse
from .linalg import mat_vec, rref
from .ratio import is_rat, rat


class CayleyAlgebra:

    def __init__(self, base, params, label=""):
        self.base = base
        params = tuple(self._scalar(p) for p in params)
        if len(params) != 3 or any(p.is_zero() for p in params):
            raise InvariantViolation("need three nonzero doubling parameters")
        self.params = params
        self.label = label or "Cayley(%s;%s,%s,%s)" % ((base.label,) + params)
        a, b, c = params
        self.norm_diag = (base.one, -a, -b, a * b, -c, a * c, b * c, -a * b * c)
        self.zero = CayleyElem(self, (base.zero,) * 8)
        self.one = self.elem([base.one])
        for i in range(8):
            e = self.basis_elem(i)
            if e * self.one != e or self.one * e != e:
                raise InvariantViolation("unit law failed in doubling tensor")

    def _scalar(self, v):
        if isinstance(v, FieldElem):
            if v.parent is not self.base:
                raise MixedParents("parameter from a different field")
            return v
        return self.base.from_rational(rat(v))

    def elem(self, coords):
        coords = [self._scalar(c) for c in coords]
        coords += [self.base.zero] * (8 - len(coords))
        return CayleyElem(self, tuple(coords))

    def basis_elem(self, i):
        coords = [self.base.zero] * 8
        coords[i] = self.base.one
        return CayleyElem(self, tuple(coords))

    def basis(self):
        return [self.basis_elem(i) for i in range(8)]

    def _mul_level(self, x, y, level):
        """Recursive doubling product on coordinate tuples of length 2^level."""
        if level == 0:
            return (x[0] * y[0],)
        h = 1 << (level - 1)
        g = self.params[level - 1]
        u, v = x[:h], x[h:]
        w, z = y[:h], y[h:]
        zc = self._conj_level(z, level - 1)
        wc = self._conj_level(w, level - 1)
        first = tuple(p + g * q for p, q in zip(
            self._mul_level(u, w, level - 1), self._mul_level(zc, v, level - 1)))
        second = tuple(p + q for p, q in zip(
            self._mul_level(z, u, level - 1), self._mul_level(v, wc, level - 1)))
        return first + second

    @staticmethod
    def _conj_level(x, level):
        if level == 0:
            return x
        return (x[0],) + tuple(-c for c in x[1:])

    def descriptor(self):
        from .ratio import rat_str
        return {"base": self.base.label,
                "params": [rat_str(p.rational_value()) for p in self.params]}

    def __repr__(self):
        return "CayleyAlgebra(%s)" % self.label


class CayleyElem:

    __slots__ = ("parent", "coords")

    def __init__(self, parent, coords):
        self.parent = parent
        self.coords = coords

    def _check(self, other):
        if not isinstance(other, CayleyElem):
            raise TypeError("expected CayleyElem")
        if other.parent is not self.parent:
            raise MixedParents("octonions from different algebras")

    def __add__(self, other):
        self._check(other)
        return CayleyElem(self.parent, tuple(
            a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return CayleyElem(self.parent, tuple(
            a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return CayleyElem(self.parent, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, CayleyElem):
            self._check(other)
            return CayleyElem(self.parent, self.parent._mul_level(
                self.coords, other.coords, 3))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        if is_rat(c):
            c = self.parent.base.from_rational(c)
        return CayleyElem(self.parent, tuple(c * a for a in self.coords))

    def conj(self):
        return CayleyElem(self.parent, self.parent._conj_level(self.coords, 3))

    def trace(self):
        return self.coords[0] + self.coords[0]

    def norm(self):
        acc = self.parent.base.zero
        for d, c in zip(self.parent.norm_diag, self.coords):
            acc = acc + d * c * c
        return acc

    def norm_bilinear(self, other):
        """n(x, y) = (n(x+y) - n(x) - n(y)) / 2."""
        self._check(other)
        acc = self.parent.base.zero
        for d, a, b in zip(self.parent.norm_diag, self.coords, other.coords):
            acc = acc + d * a * b
        return acc

    def is_zero(self):
        return all(c.is_zero() for c in self.coords)

    def __eq__(self, other):
        return (isinstance(other, CayleyElem) and self.parent is other.parent
                and self.coords == other.coords)

    def __hash__(self):
        return hash((id(self.parent), self.coords))

    def __repr__(self):
        return "Cay(%s)" % (", ".join(repr(c) for c in self.coords))


def cayley_mul(a, b):
    return a * b


def cayley_u_op(a):
    """8x8 matrix of x -> a(xa) in the doubling basis."""
    alg = a.parent
    cols = []
    for e in alg.basis():
        img = a * (e * a)
        cols.append(img.coords)
    return [list(row) for row in zip(*cols)]


def reflection(h_basis, e):
    """Reflection fixing the quaternion subalgebra spanned by h_basis.

    h_basis must be a multiplication-closed 4-space containing 1; the map is
    identity on it and -1 on its doubling complement h_basis * e.
    """
    if len(h_basis) != 4:
        raise NotSubalgebra("need a 4-dimensional subspace")
    alg = h_basis[0].parent
    field = alg.base
    rows = [list(h.coords) for h in h_basis]
    red, pivots = rref(rows)
    if len(pivots) != 4:
        raise NotSubalgebra("given vectors are dependent")
    from .linalg import row_space_contains
    if not row_space_contains(red, alg.one.coords, field):
        raise NotSubalgebra("subalgebra must contain 1")
    for x in h_basis:
        for y in h_basis:
            if not row_space_contains(red, (x * y).coords, field):
                raise NotSubalgebra("4-space is not closed under multiplication")
    comp = [h * e for h in h_basis]
    cols = [list(h.coords) for h in h_basis] + [list(c.coords) for c in comp]
    change = [list(r) for r in zip(*cols)]          # columns = new basis
    back = mat_inverse(change, field)
    tau = []
    for i in range(8):
        coeffs = mat_vec(back, alg.basis_elem(i).coords)
        img = alg.zero
        for j in range(8):
            basis_img = h_basis[j] if j < 4 else -comp[j - 4]
            img = img + basis_img.scale(coeffs[j])
        tau.append(img.coords)
    mat = [list(r) for r in zip(*tau)]              # columns were images

    def apply(x):
        return CayleyElem(alg, tuple(mat_vec(mat, x.coords)))

    # tau^2 = 1 and multiplicativity on the full basis
    for i in range(8):
        ei = alg.basis_elem(i)
        if apply(apply(ei)) != ei:
            raise NotSubalgebra("reflection does not square to identity")
        for j in range(8):
            ej = alg.basis_elem(j)
            if apply(ei * ej) != apply(ei) * apply(ej):
                raise NotSubalgebra("reflection is not an algebra map; "
                                    "complement is not a doubling pair")
    return mat
