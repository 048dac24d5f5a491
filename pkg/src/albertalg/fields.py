"""Exact arithmetic over Q and small number fields Q[x]/(f).

Fields carry an explicitly declared automorphism group (generator images,
closed and machine-verified at construction) so that Galois norms, traces
and the constructive Hilbert-90 solver are available downstream.
Characteristic 0 only; degrees 1 through 6.
"""

from .errors import (
    DivisionByZero,
    ExhaustedCandidates,
    InvariantViolation,
    MixedParents,
    NormNotOne,
    NotGalois,
    NotInCenter,
    NotIrreducible,
    ParseError,
)
from .ratio import ONE, ZERO, is_rat, rat, rat_str

# ---------------------------------------------------------------------------
# dense polynomial helpers over mpq, coefficients ascending


def poly_trim(p):
    n = len(p)
    while n > 0 and p[n - 1] == 0:
        n -= 1
    return p[:n]


def poly_add(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return poly_trim(out)


def poly_scale(p, c):
    if c == 0:
        return []
    return [c * a for a in p]


def poly_mul(p, q):
    if not p or not q:
        return []
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly_trim(out)


def poly_divmod(p, q):
    q = poly_trim(list(q))
    if not q:
        raise DivisionByZero("polynomial division by zero")
    p = list(p)
    dq = len(q) - 1
    lead = q[-1]
    quot = [ZERO] * max(len(p) - dq, 0)
    while len(poly_trim(p)) - 1 >= dq and poly_trim(p):
        p = poly_trim(p)
        shift = len(p) - 1 - dq
        c = p[-1] / lead
        quot[shift] = c
        for i in range(dq + 1):
            p[shift + i] -= c * q[i]
    return poly_trim(quot), poly_trim(p)


def poly_xgcd(p, q):
    """Extended gcd: returns (g, s, t) with s*p + t*q = g (g monic)."""
    r0, r1 = poly_trim(list(p)), poly_trim(list(q))
    s0, s1 = [ONE], []
    t0, t1 = [], [ONE]
    while r1:
        qq, rr = poly_divmod(r0, r1)
        r0, r1 = r1, rr
        s0, s1 = s1, poly_add(s0, poly_scale(poly_mul(qq, s1), -ONE))
        t0, t1 = t1, poly_add(t0, poly_scale(poly_mul(qq, t1), -ONE))
    if r0:
        c = r0[-1]
        r0 = poly_scale(r0, 1 / c)
        s0 = poly_scale(s0, 1 / c)
        t0 = poly_scale(t0, 1 / c)
    return r0, s0, t0


def _rational_roots(poly):
    """Rational roots of a polynomial with rational coefficients."""
    den = 1
    for c in poly:
        den *= c.denominator
    ints = [int(c * den) for c in poly]
    while ints and ints[0] == 0:
        # x = 0 is a root
        return True
    a0, an = abs(ints[0]), abs(ints[-1])

    def divisors(n):
        out = []
        d = 1
        while d * d <= n:
            if n % d == 0:
                out.append(d)
                out.append(n // d)
            d += 1
        return out

    for p in divisors(a0):
        for q in divisors(an):
            for sign in (1, -1):
                r = rat(sign * p, q)
                val = ZERO
                for c in reversed(poly):
                    val = val * r + c
                if val == 0:
                    return True
    return False


def _is_irreducible(poly):
    """Irreducibility over Q for monic polynomials of degree 1..6."""
    deg = len(poly) - 1
    if deg == 1:
        return True
    if deg <= 3:
        # quadratics and cubics are reducible iff they have a rational root
        return not _rational_roots(poly)
    # degrees 4..6: defer to sympy's factorizer (imported lazily)
    from sympy import Poly, Symbol
    from sympy import Rational as SymRational

    x = Symbol("x")
    coeffs = [SymRational(int(c.numerator), int(c.denominator)) for c in poly]
    expr = sum(c * x**i for i, c in enumerate(coeffs))
    return Poly(expr, x).is_irreducible


# ---------------------------------------------------------------------------


class NumberField:
    """Q[x]/(f) with f monic irreducible of degree 1..6.

    Automorphisms are declared by generator images and closed under
    composition here; each image s is verified to satisfy f(s) = 0 mod f.
    """

    def __init__(self, poly, aut_images=(), label=""):
        poly = [rat(c) for c in poly]
        if len(poly) < 2 or len(poly) > 7:
            raise InvariantViolation("field degree must be between 1 and 6")
        if poly[-1] != 1:
            raise InvariantViolation("defining polynomial must be monic")
        if not _is_irreducible(poly):
            raise NotIrreducible("defining polynomial is reducible over Q")
        self.poly = tuple(poly)
        self.degree = len(poly) - 1
        self.label = label or "Q[x]/(%s)" % ",".join(rat_str(c) for c in poly)
        # reduction table for x^degree .. x^(2*degree-2)
        d = self.degree
        red = []
        cur = [-c for c in poly[:-1]]  # x^d
        red.append(list(cur))
        for _ in range(d - 2):
            cur = [ZERO] + cur
            if len(cur) > d:
                top = cur[d]
                cur = cur[:d]
                for i in range(d):
                    cur[i] += top * red[0][i]
            red.append(list(cur))
        self._red = red
        self.zero = FieldElem(self, (ZERO,) * d)
        self.one = self.from_rational(ONE)
        self.automorphisms = self._close_automorphisms(aut_images)

    # -- construction helpers ------------------------------------------------

    def elem(self, coeffs):
        coeffs = [rat(c) for c in coeffs]
        if len(coeffs) > self.degree:
            raise InvariantViolation("too many coefficients")
        coeffs += [ZERO] * (self.degree - len(coeffs))
        return FieldElem(self, tuple(coeffs))

    def from_rational(self, q):
        return FieldElem(self, (rat(q),) + (ZERO,) * (self.degree - 1))

    def gen(self):
        if self.degree == 1:
            return self.one
        return self.elem([0, 1])

    def _reduce(self, coeffs):
        """Reduce a product (length <= 2d-1) modulo the defining poly."""
        d = self.degree
        out = list(coeffs[:d]) + [ZERO] * (d - min(len(coeffs), d))
        for i in range(d, len(coeffs)):
            c = coeffs[i]
            if c == 0:
                continue
            row = self._red[i - d]
            for j in range(d):
                out[j] += c * row[j]
        return tuple(out)

    def _close_automorphisms(self, aut_images):
        images = [self.gen()]  # identity
        pending = [self.elem(img) if not isinstance(img, FieldElem) else img
                   for img in aut_images]
        for img in pending:
            if self._eval_poly_at(img).coeffs != self.zero.coeffs:
                raise InvariantViolation(
                    "declared automorphism image is not a root of the "
                    "defining polynomial")
        group = list(images)
        frontier = [g for g in pending if g not in group]
        group.extend(frontier)
        changed = True
        while changed:
            changed = False
            for a in list(group):
                for b in list(group):
                    c = self._compose_images(a, b)
                    if c not in group:
                        if len(group) >= self.degree:
                            raise InvariantViolation(
                                "automorphism set does not close into a "
                                "group of order <= degree")
                        group.append(c)
                        changed = True
        return tuple(FieldAutomorphism(self, img) for img in group)

    def _eval_poly_at(self, elem):
        acc = self.zero
        for c in reversed(self.poly):
            acc = acc * elem + self.from_rational(c)
        return acc

    def _compose_images(self, a, b):
        """Image of (sigma_a . sigma_b): substitute a's image into b's."""
        acc = self.zero
        for c in reversed(b.coeffs):
            acc = acc * a + self.from_rational(c)
        return acc

    # -- predicates ----------------------------------------------------------

    @property
    def is_galois(self):
        return len(self.automorphisms) == self.degree

    def identity_automorphism(self):
        return self.automorphisms[0]

    def __repr__(self):
        return "NumberField(%s)" % self.label

    def __eq__(self, other):
        return self is other

    def __hash__(self):
        return id(self)

    # -- JSON ----------------------------------------------------------------

    def descriptor(self):
        return {
            "label": self.label,
            "poly": [rat_str(c) for c in self.poly],
            "automorphisms": [[rat_str(c) for c in a.image.coeffs]
                              for a in self.automorphisms[1:]],
        }

    @staticmethod
    def from_descriptor(desc):
        try:
            poly = [rat(c) for c in desc["poly"]]
            auts = [[rat(c) for c in img] for img in desc.get("automorphisms", [])]
            label = desc.get("label", "")
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError("bad field descriptor: %s" % exc) from exc
        return NumberField(poly, auts, label=label)


class FieldAutomorphism:
    """A Q-automorphism, stored as the generator image plus its matrix."""

    __slots__ = ("field", "image", "_mat")

    def __init__(self, field, image):
        self.field = field
        self.image = image
        d = field.degree
        cols = []
        p = field.one
        for _ in range(d):
            cols.append(p.coeffs)
            p = p * image
        self._mat = cols  # column i = coeffs of image^i

    def __call__(self, elem):
        if elem.parent is not self.field:
            raise MixedParents("automorphism applied to foreign element")
        d = self.field.degree
        out = [ZERO] * d
        for i, c in enumerate(elem.coeffs):
            if c == 0:
                continue
            col = self._mat[i]
            for j in range(d):
                out[j] += c * col[j]
        return FieldElem(self.field, tuple(out))

    def compose(self, other):
        """self . other (apply other first)."""
        img = self.field._compose_images(self.image, other.image)
        for a in self.field.automorphisms:
            if a.image == img:
                return a
        raise InvariantViolation("composition left the declared group")

    @property
    def is_identity(self):
        return self.image == self.field.gen()

    def order(self):
        n, a = 1, self
        while not a.is_identity:
            a = a.compose(self)
            n += 1
        return n

    def __eq__(self, other):
        return isinstance(other, FieldAutomorphism) and \
            self.field is other.field and self.image == other.image

    def __hash__(self):
        return hash((id(self.field), self.image.coeffs))

    def __repr__(self):
        return "Aut(x -> %s)" % (self.image,)


class FieldElem:
    """Element of a NumberField; immutable coefficient vector over Q."""

    __slots__ = ("parent", "coeffs")

    def __init__(self, parent, coeffs):
        self.parent = parent
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.parent is not self.parent:
                raise MixedParents(
                    "%s vs %s" % (self.parent.label, other.parent.label))
            return other
        if is_rat(other):
            return self.parent.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElem(self.parent, tuple(
            a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElem(self.parent, tuple(
            a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return FieldElem(self.parent, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        d = self.parent.degree
        if d == 1:
            return FieldElem(self.parent, (a[0] * b[0],))
        prod = [ZERO] * (2 * d - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                prod[i + j] += x * y
        return FieldElem(self.parent, self.parent._reduce(prod))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero in %s" % self.parent.label)
        g, s, _ = poly_xgcd(poly_trim(list(self.coeffs)),
                            list(self.parent.poly))
        if len(g) != 1:
            raise DivisionByZero("element not invertible (reducible modulus?)")
        return self.parent.elem(s)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out, base = self.parent.one, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise NotInCenter("value %r does not lie in Q" % (self,))
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.parent is other.parent and self.coeffs == other.coeffs
        if is_rat(other):
            return self.is_rational() and self.coeffs[0] == rat(other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.parent), self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.parent.degree == 1:
            return str(self.coeffs[0])
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(str(c) if i == 0 else "%s*x^%d" % (c, i))
        return "(" + " + ".join(terms) + ")"


# ---------------------------------------------------------------------------
# module-level operations


def field_arith(a, b, op):
    """Dispatch exact arithmetic; op in {add, sub, mul, div}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero():
            raise DivisionByZero("division by zero")
        return a / b
    raise ValueError("unknown op %r" % op)


def galois_norm_trace(a):
    """(norm, trace) over Q via the full automorphism group."""
    field = a.parent
    if not field.is_galois:
        raise NotGalois(
            "field %s has %d declared automorphisms, degree %d"
            % (field.label, len(field.automorphisms), field.degree))
    norm = field.one
    trace = field.zero
    for sigma in field.automorphisms:
        img = sigma(a)
        norm = norm * img
        trace = trace + img
    for val in (norm, trace):
        if not val.is_rational():
            raise NotGalois("norm/trace failed to descend to Q")
    return norm, trace


def hilbert90(alpha, sigma):
    """Return q != 0 with alpha = q^(-1) * sigma(q), for norm-one alpha.

    Builds q = c + a'*sigma(c) + a'*sigma(a')*sigma^2(c) with a' = 1/alpha,
    scanning power-basis candidates c until q is nonzero; the defining
    identity alpha*q = sigma(q) is verified before returning.
    """
    field = alpha.parent
    if not (field.is_galois and field.degree == 3):
        raise NotGalois("Hilbert 90 path requires a cyclic cubic field")
    if sigma.is_identity or sigma.order() != 3:
        raise NotGalois("sigma must generate the cubic Galois group")
    norm, _ = galois_norm_trace(alpha)
    if norm != field.one:
        raise NormNotOne("alpha has norm %r, expected 1" % norm)
    ap = alpha.inverse()
    w1 = ap                       # a'
    w2 = ap * sigma(ap)           # a' * sigma(a')
    candidates = [field.one, field.gen(), field.gen() ** 2,
                  field.gen() + 1, field.gen() + 2, field.gen() ** 2 + field.gen()]
    for c in candidates:
        q = c + w1 * sigma(c) + w2 * sigma(sigma(c))
        if not q.is_zero():
            if alpha * q != sigma(q):
                raise ExhaustedCandidates(
                    "Hilbert-90 identity failed for a nonzero candidate")
            return q
    raise ExhaustedCandidates("no nonzero Hilbert-90 candidate found")


# ---------------------------------------------------------------------------
# shipped example fields

QQ = NumberField([0, 1], label="Q")
#: K = Q(i)
GAUSS = NumberField([1, 0, 1], aut_images=[[0, -1]], label="Q(i)")
#: L = the cyclic cubic field of conductor 7, sigma: x -> x^2 - 2
CYCLIC7 = NumberField([-1, -2, 1, 1], aut_images=[[-2, 0, 1]], label="L7")


def shipped_fields():
    return {f.label: f for f in (QQ, GAUSS, CYCLIC7)}
