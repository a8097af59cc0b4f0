"""Exact rational linear programming.

A dense two-phase simplex over ``Fraction`` with Bland's pivot rule, which
guarantees termination in exact arithmetic.  Variables are free; the
standard-form split x = x+ - x- happens internally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class LpResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None = None
    point: tuple | None = None

    @property
    def is_optimal(self):
        return self.status == "optimal"


def _pivot(tab, basis, r, c):
    piv = tab[r][c]
    if piv != 1:
        inv = Fraction(1) / piv
        tab[r] = [x * inv for x in tab[r]]
    row_r = tab[r]
    for i in range(len(tab)):
        if i != r:
            f = tab[i][c]
            if f != 0:
                tab[i] = [a - f * b for a, b in zip(tab[i], row_r)]
    basis[r] = c


def _run_simplex(tab, basis, z, m):
    """Maximize with reduced-cost row z over the first m tableau rows."""
    ncols = len(z) - 1
    while True:
        enter = next((j for j in range(ncols) if z[j] > 0), None)
        if enter is None:
            return "optimal"
        leave = None
        best = None
        for i in range(m):
            coef = tab[i][enter]
            if coef > 0:
                ratio = tab[i][-1] / coef
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            return "unbounded"
        _pivot(tab, basis, leave, enter)
        f = z[enter]
        if f != 0:
            z[:] = [a - f * b for a, b in zip(z, tab[leave])]


def simplex_solve(objective, a_le=(), b_le=(), a_eq=(), b_eq=(), maximize=True):
    """Solve max/min objective . x subject to a_le x <= b_le, a_eq x = b_eq."""
    n = len(objective)
    obj = [Fraction(c) for c in objective]
    if not maximize:
        obj = [-c for c in obj]

    rows = []
    senses = []
    for a, b in zip(a_le, b_le):
        rows.append([Fraction(x) for x in a] + [Fraction(b)])
        senses.append("le")
    for a, b in zip(a_eq, b_eq):
        rows.append([Fraction(x) for x in a] + [Fraction(b)])
        senses.append("eq")
    m = len(rows)

    if n == 0:
        ok = all((r[-1] >= 0 if s == "le" else r[-1] == 0) for r, s in zip(rows, senses))
        if not ok:
            return LpResult("infeasible")
        return LpResult("optimal", Fraction(0), ())

    # split free variables: columns 0..n-1 are x+, n..2n-1 are x-
    nsplit = 2 * n
    tab = []
    for r, s in zip(rows, senses):
        body = r[:-1]
        row = [x for x in body] + [-x for x in body]
        tab.append(row + [r[-1]])

    # normalize rhs >= 0
    for i in range(m):
        if tab[i][-1] < 0:
            tab[i] = [-x for x in tab[i]]
            senses[i] = {"le": "ge", "ge": "le", "eq": "eq"}[senses[i]]

    # slack / surplus columns
    ncols = nsplit
    slack_col = {}
    for i, s in enumerate(senses):
        if s in ("le", "ge"):
            slack_col[i] = ncols
            ncols += 1
    art_col = {}
    for i, s in enumerate(senses):
        if s in ("eq", "ge"):
            art_col[i] = ncols
            ncols += 1

    full = []
    basis = []
    for i in range(m):
        row = tab[i][:-1] + [Fraction(0)] * (ncols - nsplit) + [tab[i][-1]]
        if i in slack_col:
            row[slack_col[i]] = Fraction(1) if senses[i] == "le" else Fraction(-1)
        if i in art_col:
            row[art_col[i]] = Fraction(1)
        full.append(row)
        basis.append(art_col[i] if i in art_col else slack_col[i])

    artificials = set(art_col.values())

    # phase 1: maximize -(sum of artificials)
    if artificials:
        z = [Fraction(0)] * (ncols + 1)
        for j in artificials:
            z[j] = Fraction(-1)
        for i in range(m):
            if basis[i] in artificials:
                z = [a + b for a, b in zip(z, full[i])]
        for j in artificials:
            z[j] = Fraction(0) if any(basis[i] == j for i in range(m)) else z[j]
        status = _run_simplex(full, basis, z, m)
        assert status == "optimal"
        if any(basis[i] in artificials and full[i][-1] != 0 for i in range(m)):
            return LpResult("infeasible")
        # pivot remaining zero-level artificials out of the basis
        drop = []
        for i in range(m):
            if basis[i] in artificials:
                col = next((j for j in range(nsplit) if full[i][j] != 0), None)
                if col is None:
                    drop.append(i)
                else:
                    _pivot(full, basis, i, col)
        for i in sorted(drop, reverse=True):
            del full[i]
            del basis[i]
        m = len(full)
        for row in full:
            for j in artificials:
                row[j] = Fraction(0)

    # phase 2
    cost = obj + [-c for c in obj] + [Fraction(0)] * (ncols - nsplit)
    z = cost + [Fraction(0)]
    for i in range(m):
        cb = cost[basis[i]]
        if cb != 0:
            z = [a - cb * b for a, b in zip(z, full[i])]
    for j in artificials:
        z[j] = Fraction(0)
    status = _run_simplex(full, basis, z, m)
    if status == "unbounded":
        return LpResult("unbounded")

    xs = [Fraction(0)] * ncols
    for i in range(m):
        xs[basis[i]] = full[i][-1]
    point = tuple(xs[j] - xs[n + j] for j in range(n))
    value = sum(c * x for c, x in zip(objective, point))
    return LpResult("optimal", Fraction(value), point)


def lp_feasible(a_le=(), b_le=(), a_eq=(), b_eq=(), n=None):
    """Feasibility of a closed system; returns a witness point or None."""
    if n is None:
        n = len(a_le[0]) if a_le else (len(a_eq[0]) if a_eq else 0)
    res = simplex_solve([Fraction(0)] * n, a_le, b_le, a_eq, b_eq)
    return res.point if res.is_optimal else None


def strict_feasible(a_le=(), b_le=(), a_lt=(), b_lt=(), a_eq=(), b_eq=(), n=None):
    """Feasibility of a system with strict rows a_lt x < b_lt.

    Maximizes a margin t with a_lt x + t <= b_lt, 0 <= t <= 1; the open
    system is feasible exactly when the optimum is positive.  Returns a
    witness point or None.
    """
    if n is None:
        for block in (a_le, a_lt, a_eq):
            if block:
                n = len(block[0])
                break
        else:
            n = 0
    rows = []
    rhs = []
    for a, b in zip(a_le, b_le):
        rows.append(list(a) + [Fraction(0)])
        rhs.append(b)
    for a, b in zip(a_lt, b_lt):
        rows.append(list(a) + [Fraction(1)])
        rhs.append(b)
    rows.append([Fraction(0)] * n + [Fraction(1)])
    rhs.append(Fraction(1))
    rows.append([Fraction(0)] * n + [Fraction(-1)])
    rhs.append(Fraction(0))
    eq_rows = [list(a) + [Fraction(0)] for a in a_eq]
    res = simplex_solve([Fraction(0)] * n + [Fraction(1)], rows, rhs, eq_rows, list(b_eq))
    if not res.is_optimal or res.value <= 0:
        return None
    return res.point[:n]
