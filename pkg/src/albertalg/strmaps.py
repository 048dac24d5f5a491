"""Structure-group machinery for Albert algebras.

Words in the inner structure group (U-operators and scalar maps), exact
classification of linear maps as automorphisms / norm isometries /
similarities, and the named automorphism constructors psi_{a,b}, I_a,
J_p, phi_{p,q} for the two Tits constructions.
"""

from . import albert
from .albert import FIRST, SECOND, LinOp
from .assoc3 import AssocElem, invert as assoc_invert
from .errors import (MixedParents, NormMismatch, NormNotOne,
                     NotAutomorphism, NotInvertible, NotInvertibleGenerator,
                     NotIsomorphism, NotSimilarity, NotSpecialUnitary,
                     ParseError, WrongBackend)
from .linalg import mat_vec
from .ratio import rat, rat_str


class UGen:
    """U_a for an invertible element a."""

    __slots__ = ("elem",)

    def __init__(self, elem):
        self.elem = elem

    def op(self):
        if albert.trace_norm(self.elem)[1].is_zero():
            raise NotInvertibleGenerator("U-generator has norm zero")
        return albert.u_op(self.elem)

    def similitude(self):
        n = albert.trace_norm(self.elem)[1]
        return n * n

    def to_json(self):
        return {"gen": "U",
                "elem": [rat_str(c.rational_value())
                         for c in self.elem.coords]}


class ScalarGen:
    """The scalar map R_t: x -> t x."""

    __slots__ = ("t", "parent")

    def __init__(self, parent, t):
        t = parent.base_scalar(t)
        if t.is_zero():
            raise NotInvertibleGenerator("scalar generator must be nonzero")
        self.parent = parent
        self.t = t

    def op(self):
        return make_rt(self.parent, self.t)

    def similitude(self):
        return self.t * self.t * self.t

    def to_json(self):
        return {"gen": "scalar", "t": rat_str(self.t.rational_value())}


class PrimitiveGen:
    """A named map kept unexpanded, e.g. a J_p factor inside a word."""

    __slots__ = ("name", "linop", "payload")

    def __init__(self, name, linop, payload=None):
        self.name = name
        self.linop = linop
        self.payload = payload

    def op(self):
        return self.linop

    def similitude(self):
        return self.linop.parent.base.one

    def to_json(self):
        if self.name == "Jp" and isinstance(self.payload, AssocElem):
            alg = self.linop.parent
            coords = alg._center_coords(self.payload)
            return {"gen": "prim", "name": "Jp",
                    "p": [rat_str(c.rational_value()) for c in coords]}
        raise ParseError("primitive %r has no serial form" % (self.name,))


class InstrWord:
    """A word of generators, applied right-to-left as maps."""

    __slots__ = ("parent", "gens")

    def __init__(self, parent, gens=()):
        gens = tuple(gens)
        for g in gens:
            if isinstance(g, UGen) and g.elem.parent is not parent:
                raise MixedParents("generator element in a foreign algebra")
        self.parent = parent
        self.gens = gens

    def __add__(self, other):
        if other.parent is not self.parent:
            raise MixedParents("words over different algebras")
        return InstrWord(self.parent, self.gens + other.gens)

    def __len__(self):
        return len(self.gens)

    def similitude(self):
        acc = self.parent.base.one
        for g in self.gens:
            acc = acc * g.similitude()
        return acc

    def to_json(self):
        return [g.to_json() for g in self.gens]

    @classmethod
    def from_json(cls, parent, data):
        gens = []
        try:
            for item in data:
                kind = item["gen"]
                if kind == "U":
                    gens.append(UGen(parent.from_coords(
                        [rat(c) for c in item["elem"]])))
                elif kind == "scalar":
                    gens.append(ScalarGen(parent, rat(item["t"])))
                elif kind == "prim":
                    if item["name"] != "Jp":
                        raise ParseError("unknown primitive %r"
                                         % (item["name"],))
                    p = parent._slot_from_center_coords(
                        [parent.base_scalar(rat(c)) for c in item["p"]])
                    gens.append(PrimitiveGen("Jp", make_jp(parent, p),
                                             payload=p))
                else:
                    raise ParseError("unknown generator kind %r" % (kind,))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError("bad instruction word: %s" % exc) from exc
        return cls(parent, gens)


def eval_word(word):
    """Multiply out the generator matrices (rightmost acts first)."""
    out = LinOp.identity(word.parent)
    for g in word.gens:
        out = out.compose(g.op())
    return out


def classify(f):
    """Exact classification of an invertible LinOp.

    Returns {"automorphism": bool, "isometry": bool, "similarity": factor}.
    The similarity factor compares the full coefficient vectors of the
    cubic forms N(f(x)) and N(x); NotSimilarity if no factor exists.
    """
    alg = f.parent
    base_vec = alg.norm_coefficients()
    images = [f.apply(e) for e in alg.basis()]
    g = alg.gram()
    g_imgs = [mat_vec(g, im.coords) for im in images]
    vec = []
    for i in range(27):
        for j in range(i, 27):
            c = alg.cross_mul(images[i], images[j]).coords
            for l in range(j, 27):
                acc = c[0] * g_imgs[l][0]
                for m in range(1, 27):
                    acc = acc + c[m] * g_imgs[l][m]
                vec.append(acc)
    lam = None
    for a, b in zip(vec, base_vec):
        if not b.is_zero():
            lam = a / b
            break
    if lam is None or lam.is_zero():
        raise NotSimilarity("norm of image degenerated")
    for a, b in zip(vec, base_vec):
        if a != lam * b:
            raise NotSimilarity("image norm is not proportional to the norm")
    isometry = lam == alg.base.one
    return {"automorphism": isometry and _is_automorphism(f, images),
            "isometry": isometry,
            "similarity": lam}


def _is_automorphism(f, images=None):
    alg = f.parent
    if images is None:
        images = [f.apply(e) for e in alg.basis()]
    if f.apply(alg.one) != alg.one:
        return False
    table = alg.mult_table()
    for i in range(27):
        for j in range(i, 27):
            if f.apply(table[i][j]) != alg.table_mul(images[i], images[j]):
                return False
    return True


def verify_automorphism(f):
    """Multiplicativity on all unordered basis pairs, exact."""
    if not _is_automorphism(f):
        raise NotAutomorphism("map fails multiplicativity on basis pairs")
    return f


def make_rt(alg, t):
    t = alg.base_scalar(t)
    if t.is_zero():
        raise NotInvertible("scalar map must be nonzero")
    z = alg.base.zero
    return LinOp(alg, [[t if i == j else z for j in range(27)]
                       for i in range(27)])


def _require_first(alg):
    if alg.kind != FIRST:
        raise WrongBackend("this constructor needs a first-construction "
                           "algebra")


def make_psi(alg, a, b, verify=True):
    """psi_{a,b}(x, y, z) = (a x a^{-1}, a y b^{-1}, b z a^{-1})."""
    _require_first(alg)
    na, nb = a.norm(), b.norm()
    if na.is_zero() or nb.is_zero():
        raise NotInvertible("psi parameters must be invertible")
    if na != nb:
        raise NormMismatch("psi needs N(a) = N(b)")
    ai, bi = assoc_invert(a), assoc_invert(b)

    def fn(x):
        x0, x1, x2 = x.native
        return alg.elem(a * x0 * ai, a * x1 * bi, b * x2 * ai)

    f = LinOp.from_callable(alg, fn)
    return verify_automorphism(f) if verify else f


def make_ia(alg, a, verify=True):
    """I_a = psi_{a,a}, conjugation by a in every slot."""
    return make_psi(alg, a, a, verify=verify)


def make_jp(alg, p, verify=True):
    """J_p(x, y, z) = (x, y p, p^{-1} z); needs N(p) = 1."""
    _require_first(alg)
    if p.norm() != alg.algebra.center.one:
        raise NormNotOne("J_p needs a norm-one p")
    pi = assoc_invert(p)

    def fn(x):
        x0, x1, x2 = x.native
        return alg.elem(x0, x1 * p, pi * x2)

    f = LinOp.from_callable(alg, fn)
    return verify_automorphism(f) if verify else f


def make_phi(alg, p, q=None, verify=True):
    """phi_{p,q}(a0, b) = (p a0 tau(p), p b q) on a second construction.

    Needs p in SU(B, tau) and q in SU(B, tau') with tau' = Int(u) o tau.
    """
    if alg.kind != SECOND:
        raise WrongBackend("phi needs a second-construction algebra")
    b_alg, tau, u = alg.algebra, alg.tau, alg.u
    if q is None:
        q = b_alg.one
    if p * tau.apply(p) != b_alg.one or p.norm() != b_alg.field.one:
        raise NotSpecialUnitary("p must satisfy p tau(p) = 1, N(p) = 1")
    tq = u * tau.apply(q) * assoc_invert(u)
    if q * tq != b_alg.one or q.norm() != b_alg.field.one:
        raise NotSpecialUnitary("q must satisfy q tau'(q) = 1, N(q) = 1")
    tp = tau.apply(p)

    def fn(x):
        a0, b = x.native
        return alg.elem(p * a0 * tp, p * b * q)

    f = LinOp.from_callable(alg, fn)
    return verify_automorphism(f) if verify else f


def conjugate_word(word, theta):
    """Replace each U_a by U_{theta^{-1}(a)}; scalars commute through.

    eval(conjugate_word(w, theta)) = theta^{-1} eval(w) theta.
    """
    if theta.parent is not word.parent:
        raise MixedParents("conjugator on a different algebra")
    if not _is_automorphism(theta):
        raise NotIsomorphism("conjugation needs an algebra isomorphism")
    inv = theta.inverse()
    gens = []
    for g in word.gens:
        if isinstance(g, UGen):
            gens.append(UGen(inv.apply(g.elem)))
        elif isinstance(g, ScalarGen):
            gens.append(g)
        else:
            gens.append(PrimitiveGen(g.name,
                                     inv.compose(g.linop).compose(theta),
                                     payload=None))
    return InstrWord(word.parent, gens)
