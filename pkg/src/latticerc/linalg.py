"""Exact rational and integer linear algebra primitives.

Everything here works on tuples of ``int`` or ``fractions.Fraction``;
no floating point is used anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DependentVectorsError

Vec = tuple
Mat = list


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vscale(c, u):
    return tuple(c * a for a in u)


def vgcd(u) -> int:
    g = 0
    for a in u:
        g = gcd(g, abs(int(a)))
    return g


def primitive(u):
    """Scale an integer vector down to content 1 (zero vector stays zero)."""
    g = vgcd(u)
    if g == 0:
        return tuple(int(a) for a in u)
    return tuple(int(a) // g for a in u)


def rational_primitive(a):
    """Positive rescaling of a rational vector to a primitive integer vector."""
    denoms = [Fraction(x).denominator for x in a]
    lcm = 1
    for d in denoms:
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(Fraction(x) * lcm) for x in a]
    g = vgcd(ints)
    if g == 0:
        return tuple(ints), Fraction(lcm)
    # multiplying the vector by lcm/g makes it primitive integer
    return tuple(x // g for x in ints), Fraction(lcm, g)


def sign_normalize(u):
    """Flip sign so the leading nonzero entry is positive."""
    for a in u:
        if a != 0:
            return u if a > 0 else tuple(-x for x in u)
    return u


def rref(rows):
    """Reduced row echelon form; returns (rref_rows, pivot_columns)."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    return len(rref(rows)[0])


def nullspace(rows):
    """Rational basis of {x : rows @ x = 0}, one vector per free column."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(tuple(v))
    return basis


def solve_rational(rows, rhs):
    """Solve rows @ x = rhs exactly; returns one solution or None."""
    if not rows:
        return None
    ncols = len(rows[0])
    aug = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        if pc == ncols:
            return None  # inconsistent
        x[pc] = red[r][ncols]
    # verify (free columns set to zero)
    for row, b in zip(rows, rhs):
        if dot(row, x) != b:
            return None
    return tuple(x)


def mat_inverse(rows):
    """Exact inverse of a square rational matrix, or None if singular."""
    n = len(rows)
    aug = [list(map(Fraction, rows[i])) + [Fraction(1 if j == i else 0) for j in range(n)]
           for i in range(n)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return [tuple(red[i][n:]) for i in range(n)]


def mat_mul_vec(rows, v):
    return tuple(dot(r, v) for r in rows)


def mat_mul(a, b):
    bt = list(zip(*b))
    return [tuple(dot(ra, cb) for cb in bt) for ra in a]


def det_int(rows) -> int:
    """Determinant of a square integer matrix (Bareiss elimination)."""
    n = len(rows)
    m = [list(map(int, r)) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Hermite normal form and lattice computations
# ---------------------------------------------------------------------------

def hnf_rows(rows):
    """Row-style Hermite normal form.

    Returns (H, U) with U unimodular, U @ rows = H, pivots positive and
    entries above each pivot reduced to [0, pivot).
    """
    m = [list(map(int, r)) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    u = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]

    def row_op_sub(i, j, q):
        m[i] = [a - q * b for a, b in zip(m[i], m[j])]
        u[i] = [a - q * b for a, b in zip(u[i], u[j])]

    r = 0
    for c in range(ncols):
        # euclidean elimination below row r in column c
        while True:
            nz = [i for i in range(r, nrows) if m[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(m[i][c]))
            m[r], m[piv] = m[piv], m[r]
            u[r], u[piv] = u[piv], u[r]
            done = True
            for i in range(r + 1, nrows):
                if m[i][c] != 0:
                    q = m[i][c] // m[r][c]
                    row_op_sub(i, r, q)
                    if m[i][c] != 0:
                        done = False
            if done:
                break
        if r < nrows and m[r][c] != 0:
            if m[r][c] < 0:
                m[r] = [-a for a in m[r]]
                u[r] = [-a for a in u[r]]
            for i in range(r):
                q = m[i][c] // m[r][c]
                if q:
                    row_op_sub(i, r, q)
            r += 1
            if r == nrows:
                break
    return [tuple(row) for row in m], [tuple(row) for row in u]


def hnf_cols(rows):
    """Column-style HNF: returns (H, V) with rows @ V = H, V unimodular."""
    ht, ut = hnf_rows([list(col) for col in zip(*rows)])
    h = [tuple(col) for col in zip(*ht)]
    v = [tuple(col) for col in zip(*ut)]
    return h, v


def integer_kernel(rows):
    """Lattice basis of {x integer : rows @ x = 0}."""
    if not rows:
        return []
    ncols = len(rows[0])
    h, v = hnf_cols(rows)
    basis = []
    for j in range(ncols):
        if all(h[i][j] == 0 for i in range(len(h))):
            basis.append(tuple(v[i][j] for i in range(ncols)))
    return basis


def saturation_basis(generators):
    """Basis of lin(generators) intersected with the integer lattice.

    The generators span a rational subspace; the result is a lattice basis
    of all integer vectors in that subspace (the saturated lattice), which
    may be strictly finer than the lattice the generators themselves span.
    """
    gens = [g for g in generators if any(x != 0 for x in g)]
    if not gens:
        return []
    dim = len(gens[0])
    normals = []
    for v in nullspace(gens):
        vec, _ = rational_primitive(v)
        normals.append(vec)
    if not normals:
        # full-dimensional span: the standard basis works
        return [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]
    return integer_kernel(normals)


def extend_to_unimodular(rows):
    """Complete k saturated independent integer rows to a unimodular matrix.

    The returned d x d integer matrix has the given rows first and
    determinant +-1.  Raises if the rows do not form a basis of the
    integer points of their span.
    """
    k = len(rows)
    d = len(rows[0])
    h, v = hnf_cols(rows)
    hk = [[h[i][j] for j in range(k)] for i in range(k)]
    if abs(det_int(hk)) != 1:
        raise DependentVectorsError("rows are not a saturated lattice basis")
    vinv = mat_inverse(v)
    block = []
    for i in range(d):
        if i < k:
            block.append([h[i][j] for j in range(d)])
        else:
            block.append([1 if j == i else 0 for j in range(d)])
    w = mat_mul(block, vinv)
    out = [tuple(int(x) for x in row) for row in w]
    if abs(det_int(out)) != 1:
        raise DependentVectorsError("completion failed")
    return out


def lattice_coordinates(basis, origin, points):
    """Integer coordinates of points in ``origin + Z<basis>``.

    Raises if any point is not on the affine lattice spanned there.
    """
    bt = [list(col) for col in zip(*basis)]  # d x k
    coords = []
    for p in points:
        rhs = vsub(p, origin)
        sol = solve_rational(bt, rhs)
        if sol is None or any(x.denominator != 1 for x in map(Fraction, sol)):
            raise DependentVectorsError(f"point {p} is not on the affine lattice")
        coords.append(tuple(int(x) for x in sol))
    return coords
