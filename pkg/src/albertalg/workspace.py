"""Named collections of fields and algebras loaded from JSON configs.

A config file has four optional sections: "fields", "cayley", "assoc",
"albert". Each entry carries a unique label; later sections refer to
earlier objects by label. The rational field is always available as "Q".
Scalars are rational strings "p/q"; elements of an extension field are
coefficient lists in the power basis of its generator.
"""

import json

from .albert import FIRST, REDUCED, SECOND, AlbertAlgebra
from .assoc3 import CYCLIC, MATRIX3, Assoc3Algebra, UnitaryInvolution
from .cayley import CayleyAlgebra
from .errors import ParseError
from .fields import QQ, NumberField
from .ratio import rat


def _field_elem(field, data):
    """A field element from a rational string or a coefficient list."""
    if isinstance(data, str):
        return field.from_rational(rat(data))
    return field.elem([rat(c) for c in data])


def _matrix_elem(b_alg, data):
    if len(data) != 3 or any(len(row) != 3 for row in data):
        raise ParseError("matrix entries must form a 3x3 array")
    return b_alg.elem([[_field_elem(b_alg.field, v) for v in row]
                       for row in data])


def parse_assoc_elem(d_alg, data):
    """An element from a 3x3 entry array or a flat q-coordinate list."""
    if d_alg.backend == MATRIX3 and data and isinstance(data[0], list):
        return _matrix_elem(d_alg, data)
    if len(data) != d_alg.dim_over_q:
        raise ParseError("expected %d coordinates for %s"
                         % (d_alg.dim_over_q, d_alg.label))
    return d_alg.from_q_coords([rat(c) for c in data])


def parse_albert_elem(alg, data):
    if len(data) != 27:
        raise ParseError("expected 27 coordinates")
    return alg.from_coords([rat(c) for c in data])


class Workspace:
    """Labelled fields, Cayley algebras, associative algebras with their
    involutions, and Albert algebras; one shared label namespace."""

    def __init__(self):
        self.fields = {"Q": QQ}
        self.cayley = {}
        self.assoc = {}
        self.involutions = {}
        self.albert = {}
        self._labels = {"Q"}

    # -- registration ------------------------------------------------------

    def _claim(self, label):
        if not label or not isinstance(label, str):
            raise ParseError("every object needs a string label")
        if label in self._labels:
            raise ParseError("duplicate label %r" % (label,))
        self._labels.add(label)

    def _lookup(self, table, label, what):
        try:
            return table[label]
        except KeyError:
            raise ParseError("unknown %s %r" % (what, label)) from None

    def add_field(self, desc):
        label = desc.get("label", "")
        self._claim(label)
        self.fields[label] = NumberField.from_descriptor(desc)
        return self.fields[label]

    def add_cayley(self, desc):
        label = desc.get("label", "")
        self._claim(label)
        base = self._lookup(self.fields, desc.get("base", "Q"), "field")
        try:
            params = [rat(p) for p in desc["params"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError("bad cayley entry %r: %s" % (label, exc)) from exc
        alg = CayleyAlgebra(base, params, label=label)
        self.cayley[label] = alg
        return alg

    def add_assoc(self, desc):
        label = desc.get("label", "")
        self._claim(label)
        backend = desc.get("backend")
        if backend == MATRIX3:
            field = self._lookup(self.fields, desc.get("field", "Q"), "field")
            alg = Assoc3Algebra(MATRIX3, field=field, label=label)
            inv = desc.get("involution")
            if inv is not None:
                g = (_matrix_elem(alg, inv["g"]) if "g" in inv else None)
                self.involutions[label] = UnitaryInvolution(alg, g=g)
        elif backend == CYCLIC:
            field = self._lookup(self.fields, desc.get("L", ""), "field")
            try:
                image = field.elem([rat(c) for c in desc["sigma"]])
                gamma = rat(desc["gamma"])
            except (KeyError, TypeError, ValueError) as exc:
                raise ParseError("bad cyclic entry %r: %s"
                                 % (label, exc)) from exc
            sigma = None
            for s in field.automorphisms:
                if s.image == image:
                    sigma = s
                    break
            if sigma is None:
                raise ParseError("sigma is not a declared automorphism "
                                 "of %s" % field.label)
            alg = Assoc3Algebra(CYCLIC, field=field, sigma=sigma,
                                gamma=gamma, label=label)
        else:
            raise ParseError("unknown backend %r" % (backend,))
        self.assoc[label] = alg
        return alg

    def add_albert(self, desc):
        label = desc.get("label", "")
        self._claim(label)
        kind = desc.get("kind")
        if kind == FIRST:
            d_alg = self._lookup(self.assoc, desc.get("algebra", ""),
                                 "associative algebra")
            alg = AlbertAlgebra(FIRST, label=label, algebra=d_alg,
                                mu=rat(desc["mu"]))
        elif kind == SECOND:
            b_label = desc.get("algebra", "")
            b_alg = self._lookup(self.assoc, b_label, "associative algebra")
            tau = self._lookup(self.involutions, b_label, "involution on")
            u = _matrix_elem(b_alg, desc["u"])
            mu = _field_elem(b_alg.field, desc["mu"])
            alg = AlbertAlgebra(SECOND, label=label, algebra=b_alg,
                                tau=tau, u=u, mu=mu)
        elif kind == REDUCED:
            cay = self._lookup(self.cayley, desc.get("cayley", ""),
                               "cayley algebra")
            gammas = [rat(g) for g in desc["gammas"]]
            alg = AlbertAlgebra(REDUCED, label=label, cayley=cay,
                                gammas=gammas)
        else:
            raise ParseError("unknown construction %r" % (kind,))
        self.albert[label] = alg
        return alg

    # -- loading -------------------------------------------------------------

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict):
            raise ParseError("config root must be a JSON object")
        ws = cls()
        try:
            for desc in data.get("fields", []):
                ws.add_field(desc)
            for desc in data.get("cayley", []):
                ws.add_cayley(desc)
            for desc in data.get("assoc", []):
                ws.add_assoc(desc)
            for desc in data.get("albert", []):
                ws.add_albert(desc)
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError("bad config entry: %s" % exc) from exc
        return ws

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ParseError("invalid JSON in %s: %s"
                                 % (path, exc)) from exc
        return cls.from_dict(data)

    def register_field(self, field):
        self._claim(field.label)
        self.fields[field.label] = field
        return field

    def register_assoc(self, alg, involution=None):
        self._claim(alg.label)
        self.assoc[alg.label] = alg
        if involution is not None:
            self.involutions[alg.label] = involution
        return alg

    def register_cayley(self, alg):
        self._claim(alg.label)
        self.cayley[alg.label] = alg
        return alg

    def register_albert(self, alg):
        self._claim(alg.label)
        self.albert[alg.label] = alg
        return alg

    # -- reporting -------------------------------------------------------

    def summary(self):
        out = {"fields": [], "cayley": [], "assoc": [], "albert": []}
        for label, f in self.fields.items():
            out["fields"].append({"label": label, "degree": f.degree,
                                  "galois": f.is_galois})
        for label, c in self.cayley.items():
            out["cayley"].append({"label": label, "dimension": 8,
                                  "base": c.base.label})
        for label, d in self.assoc.items():
            entry = {"label": label, "backend": d.backend,
                     "dimension_over_q": d.dim_over_q,
                     "has_involution": label in self.involutions}
            out["assoc"].append(entry)
        for label, a in self.albert.items():
            out["albert"].append({"label": label, "kind": a.kind,
                                  "dimension": 27})
        return out


_BUILTIN = None


def builtin_workspace():
    """The shipped instances every suite runs against.

    JM  first construction over 3x3 rational matrices, mu = 2
    JD  first construction over the cyclic division candidate
        (L7/Q, sigma, 2), mu = 3
    J2  second construction over 3x3 matrices over Q(i), transpose-
        conjugate involution, u = 1, mu = i
    JR  reduced split H3 over the split octonions
    JRC reduced H3 over the (-1,-1,-1) octonions
    """
    global _BUILTIN
    if _BUILTIN is not None:
        return _BUILTIN
    from .fields import CYCLIC7, GAUSS
    ws = Workspace()
    ws.register_field(GAUSS)
    ws.register_field(CYCLIC7)

    m3 = ws.register_assoc(Assoc3Algebra(MATRIX3, field=QQ, label="M3"))
    b3 = Assoc3Algebra(MATRIX3, field=GAUSS, label="B3")
    tau = UnitaryInvolution(b3)
    ws.register_assoc(b3, involution=tau)
    d7 = ws.register_assoc(Assoc3Algebra(
        CYCLIC, field=CYCLIC7, sigma=CYCLIC7.automorphisms[1],
        gamma=rat(2), label="D7"))

    osplit = ws.register_cayley(CayleyAlgebra(QQ, (1, 1, 1), label="Os"))
    oneg = ws.register_cayley(CayleyAlgebra(QQ, (-1, -1, -1), label="On"))

    ws.register_albert(AlbertAlgebra(FIRST, label="JM", algebra=m3, mu=2))
    ws.register_albert(AlbertAlgebra(FIRST, label="JD", algebra=d7, mu=3))
    ws.register_albert(AlbertAlgebra(
        SECOND, label="J2", algebra=b3, tau=tau, u=b3.one,
        mu=GAUSS.elem([0, 1])))
    ws.register_albert(AlbertAlgebra(
        REDUCED, label="JR", cayley=osplit, gammas=(1, 1, 1)))
    ws.register_albert(AlbertAlgebra(
        REDUCED, label="JRC", cayley=oneg, gammas=(1, 1, 1)))
    _BUILTIN = ws
    return ws
