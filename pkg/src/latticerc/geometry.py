"""Core geometric types and exact polyhedral computations.

Point sets are finite subsets of the integer lattice; polyhedra are given
by rational linear constraints.  All operations are pure and exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor, gcd

from . import linalg
from .errors import (
    DependentVectorsError,
    DimensionMismatchError,
    EmptyInputError,
    LowerDimensionalError,
    UnboundedPolyhedronError,
)
from .lp import LpResult, simplex_solve

LE, LT, EQ = "LE", "LT", "EQ"


@dataclass(frozen=True)
class PointSet:
    """Finite, lexicographically sorted, duplicate-free set of lattice points."""

    dim: int
    points: tuple

    @staticmethod
    def of(dim, pts):
        norm = sorted({tuple(int(c) for c in p) for p in pts})
        for p in norm:
            if len(p) != dim:
                raise DimensionMismatchError(f"point {p} does not have dimension {dim}")
        return PointSet(dim, tuple(norm))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return tuple(p) in set(self.points)

    def union(self, pts):
        return PointSet.of(self.dim, list(self.points) + [tuple(p) for p in pts])

    def difference(self, pts):
        drop = {tuple(p) for p in pts}
        return PointSet.of(self.dim, [p for p in self.points if p not in drop])

    def affine_dim(self):
        if not self.points:
            raise EmptyInputError("empty point set")
        x0 = self.points[0]
        return linalg.rank([linalg.vsub(p, x0) for p in self.points[1:]])

    def transform(self, u_rows, t=None):
        """Apply x -> U x + t with an integer matrix U and translation t."""
        t = tuple(t) if t is not None else (0,) * self.dim
        out = [linalg.vadd(linalg.mat_mul_vec(u_rows, p), t) for p in self.points]
        return PointSet.of(len(u_rows), out)


@dataclass(frozen=True)
class LinearInequality:
    """Constraint a . x REL b with REL in {LE, LT, EQ}."""

    a: tuple
    rel: str
    b: Fraction

    @staticmethod
    def of(a, rel, b):
        return LinearInequality(tuple(Fraction(x) for x in a), rel, Fraction(b))

    def satisfied(self, p):
        lhs = linalg.dot(self.a, p)
        if self.rel == LE:
            return lhs <= self.b
        if self.rel == LT:
            return lhs < self.b
        return lhs == self.b

    def satisfied_closure(self, p):
        lhs = linalg.dot(self.a, p)
        return lhs <= self.b if self.rel in (LE, LT) else lhs == self.b

    def negated(self):
        na = tuple(-x for x in self.a)
        if self.rel == LE:
            return LinearInequality(na, LT, -self.b)
        if self.rel == LT:
            return LinearInequality(na, LE, -self.b)
        raise ValueError("cannot negate an equality row")

    def normalized(self):
        """Scale to a primitive integer normal; equalities also get a sign rule."""
        vec, factor = linalg.rational_primitive(self.a)
        if factor == 0 or all(x == 0 for x in vec):
            return LinearInequality(tuple(Fraction(0) for _ in self.a), self.rel, Fraction(self.b))
        b = self.b * factor
        if self.rel == EQ:
            flipped = linalg.sign_normalize(vec)
            if flipped != vec:
                b = -b
            vec = flipped
        return LinearInequality(tuple(Fraction(x) for x in vec), self.rel, b)


@dataclass(frozen=True)
class HPolyhedron:
    """Constraint-listed polyhedron in R^dim."""

    dim: int
    constraints: tuple

    @staticmethod
    def of(dim, constraints):
        cons = tuple(constraints)
        for c in cons:
            if len(c.a) != dim:
                raise DimensionMismatchError("constraint dimension mismatch")
        return HPolyhedron(dim, cons)

    def contains(self, p):
        return all(c.satisfied(p) for c in self.constraints)

    def contains_closure(self, p):
        return all(c.satisfied_closure(p) for c in self.constraints)

    def closure(self):
        return HPolyhedron(self.dim, tuple(
            LinearInequality(c.a, LE, c.b) if c.rel == LT else c for c in self.constraints))

    def le_eq_rows(self):
        """Closure split as (a_le, b_le, a_eq, b_eq) for the LP backend."""
        a_le, b_le, a_eq, b_eq = [], [], [], []
        for c in self.constraints:
            if c.rel == EQ:
                a_eq.append(c.a)
                b_eq.append(c.b)
            else:
                a_le.append(c.a)
                b_le.append(c.b)
        return a_le, b_le, a_eq, b_eq


@dataclass(frozen=True)
class WidthData:
    """Lattice width together with all minimizing directions and face types."""

    width: int
    directions: tuple  # ((u, (i, j)), ...) with i >= j


# ---------------------------------------------------------------------------
# convex hulls
# ---------------------------------------------------------------------------

def _facets_full_dim(points, k):
    """Irredundant facets of a full-dimensional hull in Q^k by subset search."""
    facets = {}
    pts = sorted(set(points))
    for subset in itertools.combinations(range(len(pts)), k):
        base = pts[subset[0]]
        diffs = [linalg.vsub(pts[i], base) for i in subset[1:]]
        normal_space = linalg.nullspace(diffs) if diffs else [(Fraction(1),)]
        if len(normal_space) != 1:
            continue
        normal = normal_space[0]
        b = linalg.dot(normal, base)
        lo = hi = False
        for p in pts:
            v = linalg.dot(normal, p)
            if v > b:
                hi = True
            elif v < b:
                lo = True
            if lo and hi:
                break
        if lo and hi:
            continue
        if hi:
            normal = tuple(-x for x in normal)
            b = -b
        ineq = LinearInequality(normal, LE, b).normalized()
        facets[(ineq.a, ineq.b)] = ineq
    return sorted(facets.values(), key=lambda c: (c.a, c.b))


def hull_facets(points):
    """H-description of conv(points) for rational points.

    Returns a list of constraints: EQ rows pinning the affine hull plus the
    irredundant facet inequalities inside it, canonically normalized and
    sorted.
    """
    pts = sorted({tuple(Fraction(c) for c in p) for p in points})
    if not pts:
        raise EmptyInputError("hull of an empty set")
    d = len(pts[0])
    x0 = pts[0]
    diffs = [linalg.vsub(p, x0) for p in pts[1:]]
    diffs = [v for v in diffs if any(x != 0 for x in v)]

    eq_rows = []
    if len(diffs) == 0:
        normals = [tuple(Fraction(1 if j == i else 0) for j in range(d)) for i in range(d)]
    else:
        normals = linalg.nullspace(diffs)
    for nv in normals:
        c = LinearInequality(nv, EQ, linalg.dot(nv, x0)).normalized()
        eq_rows.append(c)
    eq_rows.sort(key=lambda c: (c.a, c.b))

    basis, _ = linalg.rref(diffs) if diffs else ([], [])
    k = len(basis)
    if k == 0:
        return eq_rows

    bt = [list(col) for col in zip(*basis)]  # d x k
    coords = []
    for p in pts:
        y = linalg.solve_rational(bt, linalg.vsub(p, x0))
        coords.append(tuple(y))

    inner = _facets_full_dim(coords, k)

    # pull facets back to ambient coordinates: y = R (x - x0)
    bbt = linalg.mat_mul([list(r) for r in basis], bt)
    bbt_inv = linalg.mat_inverse(bbt)
    r_map = linalg.mat_mul(bbt_inv, [list(r) for r in basis])  # k x d
    out = []
    for f in inner:
        a = tuple(sum(f.a[i] * r_map[i][j] for i in range(k)) for j in range(d))
        b = f.b + linalg.dot(a, x0)
        out.append(LinearInequality(a, LE, b).normalized())
    out.sort(key=lambda c: (c.a, c.b))
    return eq_rows + out


@lru_cache(maxsize=4096)
def _hull_cached(dim, points):
    return HPolyhedron.of(dim, hull_facets(points))


def convex_hull(x: PointSet) -> HPolyhedron:
    """Irredundant facet description of conv(X), with EQ rows for aff(X)."""
    if not x.points:
        raise EmptyInputError("hull of an empty point set")
    return _hull_cached(x.dim, x.points)


# ---------------------------------------------------------------------------
# LP wrappers and recession cone queries
# ---------------------------------------------------------------------------

def lp_solve(objective, p: HPolyhedron, maximize=True) -> LpResult:
    """Exact LP over the closure of P (strict rows are relaxed)."""
    a_le, b_le, a_eq, b_eq = p.le_eq_rows()
    return simplex_solve(list(objective), a_le, b_le, a_eq, b_eq, maximize=maximize)


def _recession_rows(p: HPolyhedron):
    a_le, b_le, a_eq, b_eq = [], [], [], []
    for c in p.constraints:
        if c.rel == EQ:
            a_eq.append(c.a)
            b_eq.append(Fraction(0))
        else:
            a_le.append(c.a)
            b_le.append(Fraction(0))
    return a_le, b_le, a_eq, b_eq


def recession_ray(p: HPolyhedron):
    """A nonzero primitive integer recession vector of P, or None."""
    a_le, b_le, a_eq, b_eq = _recession_rows(p)
    d = p.dim
    box_a = []
    box_b = []
    for i in range(d):
        e = [Fraction(0)] * d
        e[i] = Fraction(1)
        box_a.append(tuple(e))
        box_b.append(Fraction(1))
        e2 = [Fraction(0)] * d
        e2[i] = Fraction(-1)
        box_a.append(tuple(e2))
        box_b.append(Fraction(1))
    for i in range(d):
        for sign in (1, -1):
            obj = [Fraction(0)] * d
            obj[i] = Fraction(sign)
            res = simplex_solve(obj, a_le + box_a, b_le + box_b, a_eq, b_eq)
            if res.is_optimal and res.value > 0:
                vec, _ = linalg.rational_primitive(res.point)
                return vec
    return None


def recession_is_trivial(p: HPolyhedron) -> bool:
    """True when the recession cone of P is {0}."""
    return recession_ray(p) is None


# ---------------------------------------------------------------------------
# lattice point enumeration
# ---------------------------------------------------------------------------

def _strict_int_floor(b: Fraction) -> int:
    return int(b) - 1 if b.denominator == 1 else floor(b)


def _strict_int_ceil(b: Fraction) -> int:
    return int(b) + 1 if b.denominator == 1 else ceil(b)


def _enum_recursive(rows, d, prefix, out, original: HPolyhedron):
    """Depth-first lattice point enumeration with exact bound propagation.

    ``rows`` holds (a_rest, b', rel) already substituted for the prefix.
    """
    k = len(prefix)
    if k == d:
        p = tuple(prefix)
        if original.contains(p):
            out.append(p)
        return
    nrest = d - k
    # constraints with no remaining support must hold on their closure
    active = []
    for a, b, rel in rows:
        if all(x == 0 for x in a):
            if rel == EQ and b != 0:
                return
            if rel in (LE, LT) and b < 0:
                return
        else:
            active.append((a, b, rel))

    if nrest == 1:
        lo, hi = None, None
        for a, b, rel in active:
            c = a[0]
            if rel == EQ:
                v = b / c
                if v.denominator != 1:
                    return
                iv = int(v)
                lo = iv if lo is None else max(lo, iv)
                hi = iv if hi is None else min(hi, iv)
            elif c > 0:
                bound = b / c
                ub = _strict_int_floor(bound) if rel == LT else floor(bound)
                hi = ub if hi is None else min(hi, ub)
            else:
                bound = b / c
                lb = _strict_int_ceil(bound) if rel == LT else ceil(bound)
                lo = lb if lo is None else max(lo, lb)
        if lo is None or hi is None:
            raise UnboundedPolyhedronError("unbounded fiber during enumeration")
        for v in range(lo, hi + 1):
            _enum_recursive([], d, prefix + [v], out, original)
        return

    a_le, b_le, a_eq, b_eq = [], [], [], []
    for a, b, rel in active:
        if rel == EQ:
            a_eq.append(a)
            b_eq.append(b)
        else:
            a_le.append(a)
            b_le.append(b)
    obj = [Fraction(0)] * nrest
    obj[0] = Fraction(1)
    res_max = simplex_solve(obj, a_le, b_le, a_eq, b_eq, maximize=True)
    if res_max.status == "infeasible":
        return
    if res_max.status == "unbounded":
        raise UnboundedPolyhedronError("unbounded during enumeration")
    res_min = simplex_solve(obj, a_le, b_le, a_eq, b_eq, maximize=False)
    if res_min.status == "unbounded":
        raise UnboundedPolyhedronError("unbounded during enumeration")
    lo = ceil(res_min.value)
    hi = floor(res_max.value)
    for v in range(lo, hi + 1):
        nxt = []
        for a, b, rel in active:
            nxt.append((a[1:], b - a[0] * v, rel))
        _enum_recursive(nxt, d, prefix + [v], out, original)


@lru_cache(maxsize=4096)
def _lattice_points_cached(p: HPolyhedron):
    feas = lp_solve([Fraction(0)] * p.dim, p)
    if feas.status == "infeasible":
        return PointSet.of(p.dim, [])
    if not recession_is_trivial(p):
        raise UnboundedPolyhedronError("lattice point enumeration needs a bounded polyhedron")
    rows = [(tuple(Fraction(x) for x in c.a), Fraction(c.b), c.rel) for c in p.constraints]
    out = []
    _enum_recursive(rows, p.dim, [], out, p)
    return PointSet.of(p.dim, out)


def lattice_points(p: HPolyhedron) -> PointSet:
    """All integer points of a bounded polyhedron."""
    return _lattice_points_cached(p)


def is_lattice_convex(x: PointSet) -> bool:
    """True when conv(X) contains no integer points besides X."""
    if not x.points:
        raise EmptyInputError("empty point set")
    return lattice_points(convex_hull(x)) == x


# ---------------------------------------------------------------------------
# Hermite basis test and lattice width
# ---------------------------------------------------------------------------

def hermite_basis_check(u, v) -> bool:
    """Do u, v form a basis of lin({u, v}) meet Z^d?

    Decided by the row-style Hermite normal form of the d x 2 matrix with
    columns u and v, which must equal the matrix with columns e1, e2.
    """
    u = tuple(int(x) for x in u)
    v = tuple(int(x) for x in v)
    if linalg.rank([u, v]) != 2:
        raise DependentVectorsError("hermite_basis_check needs independent vectors")
    mat = [(a, b) for a, b in zip(u, v)]
    h, _ = linalg.hnf_rows(mat)
    expect = [(1, 0), (0, 1)] + [(0, 0)] * (len(u) - 2)
    return list(h) == expect


def width_along(x: PointSet, u) -> int:
    vals = [linalg.dot(u, p) for p in x.points]
    return int(max(vals) - min(vals))


def _face_dim(x: PointSet, u, side) -> int:
    vals = [linalg.dot(u, p) for p in x.points]
    target = max(vals) if side > 0 else min(vals)
    face = [p for p, v in zip(x.points, vals) if v == target]
    if len(face) == 1:
        return 0
    x0 = face[0]
    return linalg.rank([linalg.vsub(p, x0) for p in face[1:]])


def width_direction_candidates(x: PointSet, bound: int):
    """Nonzero integer u with width(X, u) <= bound, via the scaled polar."""
    diffs = sorted({linalg.vsub(p, q) for p in x.points for q in x.points if p != q})
    cons = [LinearInequality.of(delta, LE, bound) for delta in diffs]
    poly = HPolyhedron.of(x.dim, cons)
    pts = lattice_points(poly)
    return [u for u in pts if any(c != 0 for c in u)]


def lattice_width(x: PointSet) -> WidthData:
    """Lattice width of X with the complete set of minimizing directions.

    Bootstraps from the cheapest coordinate width, then enumerates the
    integer points of the correspondingly scaled polar of X - X, which is
    guaranteed to contain every optimal direction.
    """
    if not x.points:
        raise EmptyInputError("empty point set")
    if x.affine_dim() < x.dim:
        return WidthData(0, ())
    w0 = min(
        width_along(x, tuple(1 if j == i else 0 for j in range(x.dim)))
        for i in range(x.dim)
    )
    cands = width_direction_candidates(x, w0)
    w = min(width_along(x, u) for u in cands)
    dirs = []
    for u in sorted(cands):
        if width_along(x, u) == w:
            i = _face_dim(x, u, +1)
            j = _face_dim(x, u, -1)
            if i < j:
                i, j = j, i
            dirs.append((tuple(u), (i, j)))
    return WidthData(int(w), tuple(dirs))


# ---------------------------------------------------------------------------
# affine lattice charts: computing in aff(X) meet Z^d
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AffineChart:
    """Unimodular identification of aff(X) meet Z^d with Z^k."""

    origin: tuple
    basis: tuple  # k rows of length d

    @staticmethod
    def of(x: PointSet):
        x0 = x.points[0]
        gens = [linalg.vsub(p, x0) for p in x.points[1:]]
        basis = linalg.saturation_basis(gens)
        return AffineChart(tuple(x0), tuple(tuple(r) for r in basis))

    @property
    def k(self):
        return len(self.basis)

    def to_inner(self, x: PointSet) -> PointSet:
        coords = linalg.lattice_coordinates(list(self.basis), self.origin, x.points)
        return PointSet.of(self.k, coords)

    def point_to_ambient(self, y):
        p = list(self.origin)
        for c, row in zip(y, self.basis):
            for i in range(len(p)):
                p[i] += c * row[i]
        return tuple(p)

    def _coordinate_map(self):
        # rational matrix R with y = R (x - origin) on aff(X)
        b = [list(r) for r in self.basis]
        bt = [list(col) for col in zip(*b)]
        bbt_inv = linalg.mat_inverse(linalg.mat_mul(b, bt))
        return linalg.mat_mul(bbt_inv, b)

    def lift_inequality(self, c: LinearInequality) -> LinearInequality:
        """Pull an inner-coordinate constraint back to ambient space."""
        r_map = self._coordinate_map()
        k = self.k
        d = len(self.origin)
        a = tuple(sum(c.a[i] * r_map[i][j] for i in range(k)) for j in range(d))
        b = c.b + linalg.dot(a, self.origin)
        return LinearInequality.of(a, c.rel, b).normalized()

    def pinning_equalities(self):
        """EQ rows cutting out aff(X) in ambient space."""
        d = len(self.origin)
        if self.k == 0:
            normals = [tuple(Fraction(1 if j == i else 0) for j in range(d)) for i in range(d)]
        else:
            normals = linalg.nullspace([list(r) for r in self.basis])
        rows = []
        for nv in normals:
            rows.append(LinearInequality(tuple(map(Fraction, nv)), EQ,
                                         linalg.dot(nv, self.origin)).normalized())
        return sorted(rows, key=lambda c: (c.a, c.b))
