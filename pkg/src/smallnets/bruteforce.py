"""Slow, independent reference oracles for small inputs.

Boxes: every box spanned by coordinate values of P is counted directly.
Halfplanes and disks: a subset S of P is realizable iff a linear program in
the lifted coordinates (x, y, x^2+y^2) is feasible; subsets are tried from
largest to smallest. The LP is solved with an exact rational simplex.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product

from smallnets.family import Net
from smallnets.geometry import PointSet


def lp_feasible(rows) -> bool:
    """Is there x >= 0 with row . x >= 1 for every row?

    Phase-one simplex with Bland's rule on a dense Fraction tableau.
    """
    m = len(rows)
    if m == 0:
        return True
    nv = len(rows[0])
    width = nv + 2 * m
    T = []
    for i, row in enumerate(rows):
        r = [Fraction(v) for v in row] + [Fraction(0)] * (2 * m) + [Fraction(1)]
        r[nv + i] = Fraction(-1)
        r[nv + m + i] = Fraction(1)
        T.append(r)
    basis = [nv + m + i for i in range(m)]
    art = nv + m
    while True:
        cb = [1 if b >= art else 0 for b in basis]
        enter = None
        for j in range(width):
            cj = 1 if j >= art else 0
            dj = cj - sum(cb[i] * T[i][j] for i in range(m) if cb[i])
            if dj < 0:
                enter = j
                break
        if enter is None:
            return sum(T[i][-1] for i in range(m) if cb[i]) == 0
        leave, ratio = None, None
        for i in range(m):
            if T[i][enter] > 0:
                r = T[i][-1] / T[i][enter]
                if ratio is None or r < ratio or (r == ratio and basis[i] < basis[leave]):
                    leave, ratio = i, r
        piv = T[leave][enter]
        T[leave] = [v / piv for v in T[leave]]
        for i in range(m):
            if i != leave and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [a - f * b for a, b in zip(T[i], T[leave])]
        basis[leave] = enter


def _lifted_rows(inside, outside, disks):
    # unknowns a+, a-, b+, b-, c+, c-, (w); f(p) = a x + b y + c - w (x^2+y^2)
    rows = []
    for p, sgn in [(p, 1) for p in inside] + [(q, -1) for q in outside]:
        x, y = p
        row = [x, -x, y, -y, 1, -1]
        if disks:
            row.append(-(x * x + y * y))
        rows.append([sgn * v for v in row])
    return rows


def separable(inside, outside, disks: bool) -> bool:
    """Closed halfplane (or disk, halfplanes allowed) holding ``inside`` and missing ``outside``."""
    if not inside:
        return True
    if set(inside) & set(outside):
        return False
    return lp_feasible(_lifted_rows(inside, outside, disks))


def brute_planar(P: PointSet, N: Net) -> int:
    net_pts = N.points(P)
    disks = N.family.kind == "disks"
    banned = set(net_pts)
    free = [p for p in P.points if p not in banned]
    locs = sorted(set(free))
    mult = {p: free.count(p) for p in locs}
    best = 0
    for k in range(len(locs), 0, -1):
        for S in combinations(locs, k):
            val = sum(mult[p] for p in S)
            if val <= best:
                continue
            rest = [p for p in locs if p not in S] + list(banned)
            if separable(list(S), rest, disks):
                best = val
    return best


def brute_boxes(P: PointSet, N: Net) -> int:
    net_pts = N.points(P)
    axes = [sorted(set(p[k] for p in P.points)) for k in range(P.dim)]
    best = 0
    spans = [[(lo, hi) for a, lo in enumerate(ax) for hi in ax[a:]] for ax in axes]
    for box in product(*spans):
        if any(all(lo <= q[k] <= hi for k, (lo, hi) in enumerate(box)) for q in net_pts):
            continue
        c = sum(1 for p in P.points if all(lo <= p[k] <= hi for k, (lo, hi) in enumerate(box)))
        best = max(best, c)
    return best


def brute_max_avoiding(P: PointSet, N: Net) -> int:
    if N.family.kind == "boxes":
        return brute_boxes(P, N)
    return brute_planar(P, N)
