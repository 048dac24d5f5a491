"""Fixed-point and subalgebra analysis by exact linear algebra."""

from .albert import trace
from .errors import InvariantViolation, MixedParents, NotAutomorphism
from .linalg import det, identity_matrix, kernel, rref
from .ratio import rat, rat_str
from .strmaps import _is_automorphism


class Subspace:
    """A subspace of a 27-dimensional algebra, basis kept in echelon form."""

    def __init__(self, parent, rows, closed=None):
        self.parent = parent
        if rows:
            red, pivots = rref(rows)
            self.rows = red[:len(pivots)]
            self.pivots = pivots
        else:
            self.rows = []
            self.pivots = []
        self.closed = closed

    @property
    def dim(self):
        return len(self.rows)

    def basis_elems(self):
        return [self.parent.from_coords(r) for r in self.rows]

    def coords_in_basis(self, x):
        """Coefficients of x over the echelon basis, or None."""
        coeffs = [x.coords[p] for p in self.pivots]
        residue = list(x.coords)
        for c, row in zip(coeffs, self.rows):
            residue = [r - c * v for r, v in zip(residue, row)]
        if any(not r.is_zero() for r in residue):
            return None
        return coeffs

    def contains(self, x):
        if x.parent is not self.parent:
            raise MixedParents("element of a different algebra")
        return self.coords_in_basis(x) is not None

    def is_subalgebra(self):
        """Closed under the Jordan product and containing 1."""
        elems = self.basis_elems()
        if not self.contains(self.parent.one):
            return False
        for i, x in enumerate(elems):
            for y in elems[i:]:
                if not self.contains(self.parent.table_mul(x, y)):
                    return False
        return True

    def to_json(self):
        return {"basis": [[rat_str(v.rational_value()) for v in row]
                          for row in self.rows],
                "dimension": self.dim,
                "closed": self.closed}

    @classmethod
    def from_json(cls, parent, data):
        rows = [[parent.base_scalar(rat(v)) for v in row]
                for row in data["basis"]]
        return cls(parent, rows, closed=data.get("closed"))

    def __repr__(self):
        return "Subspace(dim %d of %s)" % (self.dim, self.parent.label)


def fixed_subspace(f):
    """Kernel of (f - id); flagged as a subalgebra for automorphisms."""
    alg = f.parent
    ident = identity_matrix(alg.base, 27)
    diff = [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(f.mat, ident)]
    sub = Subspace(alg, kernel(diff, alg.base))
    if _is_automorphism(f):
        sub.closed = sub.is_subalgebra()
        if not sub.closed:
            raise InvariantViolation("fixed space of an automorphism must "
                                     "be a subalgebra")
    return sub


def trace_zero(alg):
    """A0, the 26-dimensional kernel of the trace."""
    row = [trace(e) for e in alg.basis()]
    return Subspace(alg, kernel([row], alg.base))


def has_fixed_vector_in_A0(f):
    """det(f|_{A0} - id) = 0: a nonzero trace-zero fixed vector exists."""
    if not _is_automorphism(f):
        raise NotAutomorphism("the fixed-vector criterion is for "
                              "automorphisms")
    alg = f.parent
    a0 = trace_zero(alg)
    cols = []
    for b in a0.basis_elems():
        c = a0.coords_in_basis(f.apply(b))
        if c is None:
            raise InvariantViolation("automorphism does not preserve A0")
        cols.append(c)
    n = a0.dim
    mat = [[cols[j][i] - (alg.base.one if i == j else alg.base.zero)
            for j in range(n)] for i in range(n)]
    return det(mat).is_zero()


def subalgebra_closure(gens):
    """Smallest unital jmul-closed subspace containing the generators."""
    if not gens:
        raise InvariantViolation("need at least one generator")
    alg = gens[0].parent
    rows = [list(alg.one.coords)] + [list(g.coords) for g in gens]
    sub = Subspace(alg, rows)
    while True:
        elems = sub.basis_elems()
        new_rows = [list(r) for r in sub.rows]
        grew = False
        for i, x in enumerate(elems):
            for y in elems[i:]:
                p = alg.table_mul(x, y)
                if not sub.contains(p):
                    new_rows.append(list(p.coords))
                    grew = True
        if not grew:
            sub.closed = True
            return sub
        sub = Subspace(alg, new_rows)


def element_fixed_set(alg, fs):
    """Intersection of the fixed spaces of the given operators."""
    if not fs:
        return Subspace(alg, [list(r) for r in
                              identity_matrix(alg.base, 27)])
    ident = identity_matrix(alg.base, 27)
    stacked = []
    for f in fs:
        if f.parent is not alg:
            raise MixedParents("operator on a different algebra")
        stacked.extend([a - b for a, b in zip(ra, rb)]
                       for ra, rb in zip(f.mat, ident))
    return Subspace(alg, kernel(stacked, alg.base))
