"""Independent reference implementations used only by the tests.

Everything here is deliberately naive: brute-force lattice enumeration,
itertools products, floating point through scipy. None of it shares code
with the package beyond the ``MonomialIdeal`` container.
"""

import itertools
import math
from fractions import Fraction

import numpy as np
from scipy.optimize import linprog
from scipy.spatial import ConvexHull, HalfspaceIntersection


def divides(g, u):
    return all(a <= b for a, b in zip(g, u))


def member(gens, u):
    return any(divides(g, u) for g in gens)


def box(bounds):
    return itertools.product(*(range(b + 1) for b in bounds))


def minimal(points):
    pts = set(map(tuple, points))
    return sorted(p for p in pts if not any(q != p and divides(q, p) for q in pts))


def colength(gens, degrees):
    # Every standard monomial has u_i < d_i.
    return sum(1 for u in box([d - 1 for d in degrees]) if not member(gens, u))


def product_gens(g1, g2):
    return minimal(tuple(a + b for a, b in zip(x, y)) for x in g1 for y in g2)


def power_gens(gens, k, n):
    out = [(0,) * n]
    for _ in range(k):
        out = product_gens(out, gens)
    return out


def covolume_float(halfspaces, n):
    """vol{u >= 0 : some <A, u> < b} via scipy, for a list of (A, b) with A > 0."""
    top = [max(b / A[i] for A, b in halfspaces) for i in range(n)]
    # Polytope {0 <= u_i <= top_i, <A, u> >= b}; scipy wants rows  M u + c <= 0.
    rows = []
    for A, b in halfspaces:
        rows.append([-float(x) for x in A] + [float(b)])
    for i in range(n):
        e = [0.0] * n
        e[i] = -1.0
        rows.append(e + [0.0])
        e = [0.0] * n
        e[i] = 1.0
        rows.append(e + [-float(top[i])])
    interior = [float(t) * 0.999 for t in top]
    hs = HalfspaceIntersection(np.array(rows), np.array(interior))
    inside = ConvexHull(hs.intersections).volume
    return math.prod(float(t) for t in top) - inside


def lct_lp(gens, n):
    """lct = 1/t for the least t with t*(1,...,1) above a point of conv(gens)."""
    k = len(gens)
    G = np.array(gens, dtype=float).T
    # variables (lambda_1..lambda_k, t): minimize t, G lambda <= t*1, sum lambda = 1
    res = linprog(
        np.r_[np.zeros(k), 1.0],
        A_ub=np.hstack([G, -np.ones((n, 1))]),
        b_ub=np.zeros(n),
        A_eq=np.hstack([np.ones((1, k)), np.zeros((1, 1))]),
        b_eq=[1.0],
        bounds=[(0, None)] * (k + 1),
    )
    return 1.0 / res.x[-1]


def closure_power_gens(gens, m, degrees):
    """Integral closure of a^m: lattice u with u/m above some point of conv(gens)."""
    G = np.array(gens, dtype=float).T
    k = len(gens)
    pts = []
    for u in box([m * d for d in degrees]):
        res = linprog(
            np.zeros(k),
            A_ub=G,
            b_ub=np.array(u, dtype=float) / m + 1e-9,
            A_eq=np.ones((1, k)),
            b_eq=[1.0],
            bounds=[(0, None)] * k,
        )
        if res.status == 0:
            pts.append(u)
    return minimal(pts)


def weight_set(gens, m, n, cap):
    """Minimal points of {w in [0, cap]^n : <w, g> >= m for all g}, by enumeration."""
    pts = [w for w in box([cap] * n) if all(sum(a * b for a, b in zip(w, g)) >= m for g in gens)]
    return minimal(pts)


def ord_min(rays, u):
    return min(sum(a * b for a, b in zip(w, u)) for w in rays)


def simplex_count_volume(w):
    return Fraction(1, math.prod(w))
