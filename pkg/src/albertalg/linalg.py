"""Exact dense linear algebra over a NumberField.

Matrices are lists of lists of FieldElem. Elimination is Bareiss-style
fraction-free in spirit: every pivot step renormalizes to fully reduced
entries, so comparisons are exact zero tests throughout.
"""

from .errors import NotInvertible


def identity_matrix(field, n):
    z, o = field.zero, field.one
    return [[o if i == j else z for j in range(n)] for i in range(n)]


def zero_matrix(field, rows, cols):
    z = field.zero
    return [[z] * cols for _ in range(rows)]


def mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    bt = list(zip(*b))
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(p):
            bj = bt[j]
            acc = ai[0] * bj[0]
            for k in range(1, m):
                acc = acc + ai[k] * bj[k]
            row.append(acc)
        out.append(row)
    return out


def mat_vec(a, v):
    out = []
    for row in a:
        acc = row[0] * v[0]
        for k in range(1, len(v)):
            acc = acc + row[k] * v[k]
        out.append(acc)
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def mat_eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def transpose(a):
    return [list(row) for row in zip(*a)]


def rref(a):
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    if not a:
        return [], []
    mat = [list(row) for row in a]
    rows, cols = len(mat), len(mat[0])
    pivots = []
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if not mat[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c].inverse()
        mat[r] = [inv * x for x in mat[r]]
        for i in range(rows):
            if i != r and not mat[i][c].is_zero():
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return mat, pivots


def rank(a):
    return len(rref(a)[1])


def kernel(a, field):
    """Echelonized basis of the right null space of a."""
    if not a:
        return []
    cols = len(a[0])
    red, pivots = rref(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [field.zero] * cols
        vec[fc] = field.one
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][fc]
        basis.append(vec)
    return basis


def det(a):
    mat = [list(row) for row in a]
    n = len(mat)
    sign = 1
    result = None
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if not mat[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            return mat[0][0].parent.zero
        if pivot != c:
            mat[c], mat[pivot] = mat[pivot], mat[c]
            sign = -sign
        pv = mat[c][c]
        result = pv if result is None else result * pv
        inv = pv.inverse()
        for i in range(c + 1, n):
            if not mat[i][c].is_zero():
                f = mat[i][c] * inv
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[c])]
    if sign < 0:
        result = -result
    return result


def inverse(a, field):
    n = len(a)
    aug = [list(row) + list(idr) for row, idr in
           zip(a, identity_matrix(field, n))]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise NotInvertible("matrix is singular")
    return [row[n:] for row in red]


def solve(a, b, field):
    """One solution x of a x = b, or None if inconsistent."""
    n = len(a)
    cols = len(a[0])
    aug = [list(row) + [bv] for row, bv in zip(a, b)]
    red, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [field.zero] * cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][cols]
    return x


def row_space_contains(echelon_basis, vec, field):
    """Membership test against an echelonized basis (list of rows)."""
    v = list(vec)
    for row in echelon_basis:
        lead = next((i for i, x in enumerate(row) if not x.is_zero()), None)
        if lead is None:
            continue
        if not v[lead].is_zero():
            f = v[lead] * row[lead].inverse()
            v = [x - f * y for x, y in zip(v, row)]
    return all(x.is_zero() for x in v)
