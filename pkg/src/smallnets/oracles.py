"""Exact adversaries: the heaviest closed range that avoids a net.

Every oracle returns an :class:`OracleReport` whose witness is a concrete
object in exact coordinates. Symbolic choices (which boundary points a
tilted line or circle keeps) are turned into an explicit perturbed object,
and the witness is re-counted against P and N before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations

import numpy as np

from smallnets.errors import DegenerateInputError, DimensionError, FamilyMismatchError
from smallnets.family import Net, RangeFamily
from smallnets.geometry import PointSet, coord_str, fraction_str, integer_coords


@dataclass(frozen=True)
class Box:
    lo: tuple
    hi: tuple

    def contains(self, p) -> bool:
        return all(l <= c <= h for l, c, h in zip(self.lo, p, self.hi))

    def to_dict(self):
        return {"type": "box", "lo": [coord_str(c) for c in self.lo], "hi": [coord_str(c) for c in self.hi]}


@dataclass(frozen=True)
class Halfplane:
    """Closed halfplane a*x + b*y <= c."""

    a: Fraction
    b: Fraction
    c: Fraction

    def contains(self, p) -> bool:
        return self.a * p[0] + self.b * p[1] <= self.c

    def to_dict(self):
        return {"type": "halfplane", "a": coord_str(self.a), "b": coord_str(self.b), "c": coord_str(self.c)}


@dataclass(frozen=True)
class Disk:
    center: tuple
    radius_sq: Fraction

    def contains(self, p) -> bool:
        return (p[0] - self.center[0]) ** 2 + (p[1] - self.center[1]) ** 2 <= self.radius_sq

    def to_dict(self):
        return {
            "type": "disk",
            "center": [coord_str(c) for c in self.center],
            "radius_sq": coord_str(self.radius_sq),
        }


def witness_from_dict(d: dict):
    t = d["type"]
    if t == "box":
        return Box(tuple(Fraction(v) for v in d["lo"]), tuple(Fraction(v) for v in d["hi"]))
    if t == "halfplane":
        return Halfplane(Fraction(d["a"]), Fraction(d["b"]), Fraction(d["c"]))
    if t == "disk":
        return Disk(tuple(Fraction(v) for v in d["center"]), Fraction(d["radius_sq"]))
    raise ValueError(f"unknown witness type {t!r}")


@dataclass(frozen=True)
class OracleReport:
    max_count: int
    n: int
    witness: object
    candidates_examined: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.max_count, self.n)

    def to_dict(self):
        return {
            "max_count": self.max_count,
            "n": self.n,
            "fraction": fraction_str(self.fraction),
            "witness": self.witness.to_dict(),
            "candidates": self.candidates_examined,
        }


def check_witness(P: PointSet, net_points, witness) -> int:
    """Count P inside the witness; raise if it touches a net point."""
    for q in net_points:
        if witness.contains(q):
            raise AssertionError(f"witness {witness} contains net point {q}")
    return sum(1 for p in P.points if witness.contains(p))


def _finish(P, net_pts, count, witness, cands):
    got = check_witness(P, net_pts, witness)
    if got != count:
        raise AssertionError(f"witness holds {got} points, search claimed {count}")
    return OracleReport(count, P.n, witness, cands)


# --------------------------------------------------------------------- boxes


def _dense_ranks(values):
    uniq = sorted(set(values))
    pos = {v: i for i, v in enumerate(uniq)}
    return [pos[v] for v in values], len(uniq)


def _box_sweep_2d(xs, ys, blocked, ny, floor):
    """Best count of unblocked items in an axis box free of blocked items.

    ``xs``/``ys`` are dense ranks. Returns (best, key, candidates) where key is
    (xl, xr, ylo, yhi) in rank space, or None if nothing beats ``floor``.
    """
    by_x = {}
    for k, x in enumerate(xs):
        by_x.setdefault(x, []).append(k)
    xvals = sorted(by_x)
    best, key, cands = floor, None, 0
    for a, xl in enumerate(xvals):
        if all(blocked[k] for k in by_x[xl]):
            continue
        occ = np.zeros(ny, dtype=np.int64)
        blk = np.zeros(ny, dtype=bool)
        cnt = 0
        for xr in xvals[a:]:
            fresh = False
            for k in by_x[xr]:
                if blocked[k]:
                    blk[ys[k]] = True
                else:
                    occ[ys[k]] += 1
                    cnt += 1
                    fresh = True
            cands += 1
            if not fresh or cnt <= best:
                continue
            bpos = np.flatnonzero(blk)
            csum = np.concatenate(([0], np.cumsum(occ)))
            starts = np.concatenate(([0], bpos + 1))
            ends = np.concatenate((bpos, [ny]))
            sums = csum[ends] - csum[starts]
            g = int(np.argmax(sums))
            if sums[g] > best:
                best = int(sums[g])
                key = (xl, xr, int(starts[g]), int(ends[g]) - 1)
    return best, key, cands


def _box_sweep_1d(xs, blocked):
    order = sorted(range(len(xs)), key=lambda k: xs[k])
    best, run, start, key = 0, 0, None, None
    for k in order:
        if blocked[k]:
            run, start = 0, None
            continue
        if start is None:
            start = xs[k]
        run += 1
        if run > best:
            best, key = run, (start, xs[k])
    return best, key, len(order)


def max_box_avoiding(P: PointSet, N: Net, d: int | None = None) -> OracleReport:
    """Heaviest closed axis-parallel box with no net point in it.

    Each candidate box is an interval of point x-coordinates; inside that slab
    the net points cut the y-axis into gaps and the best gap wins. In three
    dimensions an outer loop runs over z-intervals.
    """
    d = P.dim if d is None else d
    if N.family.kind != "boxes":
        raise FamilyMismatchError(f"box oracle given a {N.family} net")
    if d != P.dim or N.family.dim != P.dim:
        raise DimensionError("box dimension does not match the point set")
    if d > 3:
        raise DimensionError("box oracle supports d <= 3; higher dimensions blow up combinatorially")
    if not P.distinct_coordinates():
        raise DegenerateInputError("box oracle needs distinct coordinates; apply rank_normalize first")
    net_pts = N.points(P)
    net_set = set(net_pts)
    items = list(P.points) + list(net_pts)
    blocked = [p in net_set for p in P.points] + [True] * len(net_pts)
    ranks = []
    sizes = []
    for k in range(d):
        r, m = _dense_ranks([p[k] for p in items])
        ranks.append(r)
        sizes.append(m)

    if d == 1:
        best, key, cands = _box_sweep_1d(ranks[0], blocked)
        inside = [] if key is None else [i for i in range(P.n) if not blocked[i] and key[0] <= ranks[0][i] <= key[1]]
    elif d == 2:
        best, key, cands = _box_sweep_2d(ranks[0], ranks[1], blocked, sizes[1], 0)
        inside = [] if key is None else _inside_2d(P.n, ranks[0], ranks[1], blocked, key)
    else:
        best, key, cands = 0, None, 0
        by_z = sorted(set(ranks[2]))
        for a, zl in enumerate(by_z):
            if all(blocked[k] for k in range(len(items)) if ranks[2][k] == zl):
                continue
            for zr in by_z[a:]:
                sel = [k for k in range(len(items)) if zl <= ranks[2][k] <= zr]
                if sum(1 for k in sel if not blocked[k]) <= best:
                    cands += 1
                    continue
                b, kk, c = _box_sweep_2d(
                    [ranks[0][k] for k in sel], [ranks[1][k] for k in sel], [blocked[k] for k in sel], sizes[1], best
                )
                cands += c
                if kk is not None:
                    best = b
                    key = (zl, zr, sel, kk)
        inside = []
        if key is not None:
            zl, zr, sel, kk = key
            sub = _inside_2d(len(sel), [ranks[0][k] for k in sel], [ranks[1][k] for k in sel], [blocked[k] for k in sel], kk)
            inside = [sel[s] for s in sub]
    return _finish(P, net_pts, best, _bbox_witness(P, inside, items), cands)


def _inside_2d(m, xs, ys, blocked, key):
    xl, xr, ylo, yhi = key
    return [k for k in range(m) if not blocked[k] and xl <= xs[k] <= xr and ylo <= ys[k] <= yhi]


def _bbox_witness(P, inside, items):
    if inside:
        pts = [P.points[i] for i in inside]
        lo = tuple(min(p[k] for p in pts) for k in range(P.dim))
        hi = tuple(max(p[k] for p in pts) for k in range(P.dim))
        return Box(lo, hi)
    far = tuple(max(p[k] for p in items) + 1 for k in range(P.dim))
    return Box(far, far)


# ------------------------------------------------------------ planar helpers


_INT64_SAFE_HALFPLANE = 1 << 29
_INT64_SAFE_DISK = 1 << 14


class _Locations:
    """Distinct positions of P and N in translated integer coordinates.

    ``count[k]`` is how many points of P sit at position k and can be taken;
    a position holding a net point can never be taken.
    """

    def __init__(self, P: PointSet, net_pts, safe_bound):
        table = {}
        for p in P.points:
            table.setdefault(p, [0, False])[0] += 1
        for q in net_pts:
            table.setdefault(q, [0, False])[1] = True
        self.points = sorted(table)
        self.is_net = np.array([table[p][1] for p in self.points], dtype=bool)
        self.count = np.array([0 if table[p][1] else table[p][0] for p in self.points], dtype=np.int64)
        ints = integer_coords(self.points)
        self.den = _common_den(self.points)
        self.ox = min(p[0] for p in ints)
        self.oy = min(p[1] for p in ints)
        xs = [p[0] - self.ox for p in ints]
        ys = [p[1] - self.oy for p in ints]
        big = max(max(xs), max(ys))
        dtype = np.int64 if big <= safe_bound else object
        self.X = np.array(xs, dtype=dtype)
        self.Y = np.array(ys, dtype=dtype)
        self.m = len(self.points)
        self.total = int(self.count.sum())

    def to_original(self, ix, iy):
        return (
            (Fraction(ix) + self.ox) / self.den,
            (Fraction(iy) + self.oy) / self.den,
        )


def _common_den(points):
    from math import lcm

    den = 1
    for p in points:
        for c in p:
            den = lcm(den, c.denominator)
    return den


def _planar_net(P: PointSet, N: Net):
    if P.dim != 2:
        raise DimensionError("halfplane and disk oracles are planar")
    pts = N.points(P)
    for q in pts:
        if len(q) != 2:
            raise DimensionError("net point is not planar")
    return pts


def _sum(arr, mask):
    return int(arr[mask].sum())


def _line_choice(loc, i, j):
    """Scan the line through locations i, j.

    Returns (cross, on_idx_sorted, t_sorted, best_on, choice) where choice
    describes which boundary points a tilted line keeps.
    """
    X, Y = loc.X, loc.Y
    dx = X[j] - X[i]
    dy = Y[j] - Y[i]
    cross = dx * (Y - Y[i]) - dy * (X - X[i])
    on = np.flatnonzero(cross == 0)
    t = dx * (X[on] - X[i]) + dy * (Y[on] - Y[i])
    order = sorted(range(len(on)), key=lambda k: t[k])
    on = on[order]
    t = [t[k] for k in order]
    flags = loc.is_net[on]
    counts = loc.count[on]
    if not flags.any():
        return cross, on, t, int(counts.sum()), ("prefix", len(on))
    first = int(np.argmax(flags))
    last = len(on) - 1 - int(np.argmax(flags[::-1]))
    pre = int(counts[:first].sum())
    suf = int(counts[last + 1 :].sum())
    if pre >= suf:
        return cross, on, t, pre, ("prefix", first)
    return cross, on, t, suf, ("suffix", last + 1)


def _halfplane_search(loc: _Locations):
    best, key, cands = -1, None, 0
    if loc.m == 1:
        return (loc.total, ("all",), 1) if not loc.is_net[0] else (0, ("none",), 1)
    for i, j in combinations(range(loc.m), 2):
        cross, on, t, on_best, choice = _line_choice(loc, i, j)
        for side in (1, -1):
            cands += 1
            mask = cross > 0 if side > 0 else cross < 0
            if loc.is_net[mask].any():
                continue
            val = _sum(loc.count, mask) + on_best
            if val > best:
                best, key = val, ("line", i, j, side, choice)
    if best <= 0:
        return 0, ("none",), cands
    return best, key, cands


def _cut_value(t, choice):
    kind, k = choice
    if not t:
        return 0, 1
    if kind == "prefix":
        if k == 0:
            return Fraction(t[0]) - 1, 1
        if k == len(t):
            return Fraction(t[-1]) + 1, 1
        return Fraction(t[k - 1] + t[k], 2), 1
    if k == 0:
        return Fraction(t[0]) - 1, -1
    if k == len(t):
        return Fraction(t[-1]) + 1, -1
    return Fraction(t[k - 1] + t[k], 2), -1


def _halfplane_witness(loc: _Locations, key, bounds):
    lo_x, lo_y, hi_x, hi_y = bounds
    if key[0] == "all":
        return Halfplane(Fraction(1), Fraction(0), hi_x)
    if key[0] == "none":
        return Halfplane(Fraction(1), Fraction(0), lo_x - 1)
    _, i, j, side, choice = key
    X, Y = loc.X, loc.Y
    xi, yi = int(X[i]), int(Y[i])
    dx, dy = int(X[j]) - xi, int(Y[j]) - yi
    cross, on, t, _, _ = _line_choice(loc, i, j)
    tstar, s = _cut_value([int(v) for v in t], choice)
    off = [k for k in range(loc.m) if cross[k] != 0]
    if off:
        m_off = min(abs(int(cross[k])) for k in off)
        big = max(abs(tstar - (dx * (int(X[k]) - xi) + dy * (int(Y[k]) - yi))) for k in off)
        delta = Fraction(m_off) / (big + 1)
    else:
        delta = Fraction(1)
    # g(p) = side*cross(p) + delta*s*(tstar - t(p)); keep g >= 0
    gx = side * (-dy) + delta * s * (-dx)
    gy = side * dx + delta * s * (-dy)
    g0 = side * (-dx * yi + dy * xi) + delta * s * (tstar + dx * xi + dy * yi)
    a, b, c = -gx, -gy, g0
    return Halfplane(a * loc.den, b * loc.den, c + a * loc.ox + b * loc.oy)


def _bounds(P, net_pts):
    pts = list(P.points) + list(net_pts)
    return (min(p[0] for p in pts), min(p[1] for p in pts), max(p[0] for p in pts), max(p[1] for p in pts))


def max_halfplane_avoiding(P: PointSet, N: Net) -> OracleReport:
    """Heaviest closed halfplane with no net point in it.

    Candidate boundaries are lines through two points of P or N; for each
    side, the points on the line are kept by a slight tilt as a prefix or
    suffix along the line that stops short of the first net point.
    """
    if N.family.kind not in ("halfplanes", "disks"):
        raise FamilyMismatchError(f"halfplane oracle given a {N.family} net")
    net_pts = _planar_net(P, N)
    loc = _Locations(P, net_pts, _INT64_SAFE_HALFPLANE)
    best, key, cands = _halfplane_search(loc)
    witness = _halfplane_witness(loc, key, _bounds(P, net_pts))
    return _finish(P, net_pts, best, witness, cands)


# --------------------------------------------------------------------- disks


def _incircle_all(loc, i, j, k):
    X, Y = loc.X, loc.Y
    adx, ady = X[i] - X, Y[i] - Y
    bdx, bdy = X[j] - X, Y[j] - Y
    cdx, cdy = X[k] - X, Y[k] - Y
    return (
        (adx * adx + ady * ady) * (bdx * cdy - bdy * cdx)
        + (bdx * bdx + bdy * bdy) * (cdx * ady - cdy * adx)
        + (cdx * cdx + cdy * cdy) * (adx * bdy - ady * bdx)
    )


def _orient_int(loc, i, j, k):
    X, Y = loc.X, loc.Y
    v = int((X[j] - X[i]) * (Y[k] - Y[i]) - (Y[j] - Y[i]) * (X[k] - X[i]))
    return (v > 0) - (v < 0)


def _quad_coeffs(f):
    """Coefficients (q, A, B, C) of f(x, y) = q*(x^2+y^2) + A*x + B*y + C."""
    c0 = f(0, 0)
    px = f(1, 0)
    mx = f(-1, 0)
    py = f(0, 1)
    q = Fraction(px + mx - 2 * c0, 2)
    A = Fraction(px - mx, 2)
    B = py - q - c0
    return q, A, Fraction(B), Fraction(c0)


def _angle_cmp(center):
    cx, cy = center

    def half(p):
        x, y = p[0] - cx, p[1] - cy
        return 0 if (y > 0 or (y == 0 and x > 0)) else 1

    def cmp(p, q):
        hp, hq = half(p), half(q)
        if hp != hq:
            return hp - hq
        cr = (p[0] - cx) * (q[1] - cy) - (p[1] - cy) * (q[0] - cx)
        return -1 if cr > 0 else (1 if cr < 0 else 0)

    return cmp


def _arc_choice(loc, on, center):
    """Best net-free run of consecutive on-circle positions, as a set of indices."""
    flags = loc.is_net[on]
    counts = loc.count[on]
    if not flags.any():
        return int(counts.sum()), list(on)
    if len(on) <= 3:
        keep = [int(k) for k, f in zip(on, flags) if not f]
        return int(loc.count[keep].sum()) if keep else 0, keep
    pts = {int(k): (Fraction(int(loc.X[k])), Fraction(int(loc.Y[k]))) for k in on}
    ring = sorted(pts, key=cmp_to_key(lambda a, b: _angle_cmp(center)(pts[a], pts[b])))
    start = next(s for s, k in enumerate(ring) if loc.is_net[k])
    ring = ring[start + 1 :] + ring[: start + 1]
    best, best_run, run, acc = 0, [], [], 0
    for k in ring:
        if loc.is_net[k]:
            run, acc = [], 0
            continue
        run.append(k)
        acc += int(loc.count[k])
        if acc > best:
            best, best_run = acc, list(run)
    return best, best_run


def _disk_search(loc: _Locations, floor: int):
    best, key, cands = floor, None, 0
    X, Y = loc.X, loc.Y
    for i, j in combinations(range(loc.m), 2):
        cands += 1
        # diametral disk, scaled by 4: |pi-pj|^2 - |2p - pi - pj|^2
        ex = 2 * X - X[i] - X[j]
        ey = 2 * Y - Y[i] - Y[j]
        rr = (X[i] - X[j]) ** 2 + (Y[i] - Y[j]) ** 2
        F = rr - (ex * ex + ey * ey)
        r = _score_circle(loc, F, best)
        if r is not None:
            best, key = r, ("diam", i, j)
    for i, j, k in combinations(range(loc.m), 3):
        o = _orient_int(loc, i, j, k)
        if o == 0:
            continue
        cands += 1
        F = _incircle_all(loc, i, j, k)
        if o < 0:
            F = -F
        r = _score_circle(loc, F, best)
        if r is not None:
            best, key = r, ("circ", i, j, k)
    return best, key, cands


def _score_circle(loc, F, best):
    inside = F > 0
    if loc.is_net[inside].any():
        return None
    base = _sum(loc.count, inside)
    on = np.flatnonzero(F == 0)
    upper = base + int(loc.count[on].sum())
    if upper <= best:
        return None
    if not loc.is_net[on].any():
        return upper
    if len(on) <= 3:
        # any subset of three points on a circle is an arc
        val = base + int(loc.count[on][~loc.is_net[on]].sum())
        return val if val > best else None
    return _arc_value(loc, on, base, best)


def _circle_function(loc, key):
    X, Y = loc.X, loc.Y
    if key[0] == "diam":
        _, i, j = key
        xi, yi, xj, yj = int(X[i]), int(Y[i]), int(X[j]), int(Y[j])

        def f(x, y):
            return (xi - xj) ** 2 + (yi - yj) ** 2 - ((2 * x - xi - xj) ** 2 + (2 * y - yi - yj) ** 2)

        return f
    _, i, j, k = key
    a = (int(X[i]), int(Y[i]))
    b = (int(X[j]), int(Y[j]))
    c = (int(X[k]), int(Y[k]))
    o = 1 if (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]) > 0 else -1

    def f(x, y):
        adx, ady = a[0] - x, a[1] - y
        bdx, bdy = b[0] - x, b[1] - y
        cdx, cdy = c[0] - x, c[1] - y
        return o * (
            (adx * adx + ady * ady) * (bdx * cdy - bdy * cdx)
            + (bdx * bdx + bdy * bdy) * (cdx * ady - cdy * adx)
            + (cdx * cdx + cdy * cdy) * (adx * bdy - ady * bdx)
        )

    return f


def _center_of(f):
    q, A, B, _ = _quad_coeffs(f)
    return (-A / (2 * q), -B / (2 * q))


def _arc_value(loc, on, base, best):
    # three distinct points of one circle are never collinear
    i, j, k = (int(v) for v in on[:3])
    center = _center_of(_circle_function(loc, ("circ", i, j, k)))
    val, _ = _arc_choice(loc, on, center)
    return base + val if base + val > best else None


def _disk_witness(loc: _Locations, key, F_vals):
    f = _circle_function(loc, key)
    on = [int(v) for v in np.flatnonzero(F_vals == 0)]
    q, A, B, C = _quad_coeffs(f)
    center = (-A / (2 * q), -B / (2 * q))
    if loc.is_net[on].any():
        _, keep = _arc_choice(loc, np.array(on), center)
    else:
        keep = list(on)
    keep = set(int(k) for k in keep)
    drop = [k for k in on if k not in keep]
    P_int = {k: (Fraction(int(loc.X[k])), Fraction(int(loc.Y[k]))) for k in range(loc.m)}

    if not drop:
        ell = (Fraction(0), Fraction(0), Fraction(1))
    elif not keep:
        ell = (Fraction(0), Fraction(0), Fraction(-1))
    elif len(keep) == 1:
        (u,) = keep
        ux, uy = P_int[u]
        nx, ny = ux - center[0], uy - center[1]
        eta = min(((P_int[v][0] - ux) ** 2 + (P_int[v][1] - uy) ** 2) for v in drop) / 4
        # nx*(x-ux) + ny*(y-uy) + eta
        ell = (nx, ny, -nx * ux - ny * uy + eta)
    else:
        ordered = sorted(keep, key=cmp_to_key(lambda a, b: _angle_cmp(center)(P_int[a], P_int[b])))
        u1, ur = _arc_ends(ordered, keep, drop, P_int, center)
        (x1, y1), (x2, y2) = P_int[u1], P_int[ur]

        def s(p):
            return (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1)

        sig = 1 if s(P_int[drop[0]]) > 0 else -1
        eta = min(abs(s(P_int[v])) for v in drop) / 2
        # -sig*s(p) + eta
        ell = (sig * (y2 - y1), -sig * (x2 - x1), -sig * (-(x2 - x1) * y1 + (y2 - y1) * x1) + eta)
    off = [k for k in range(loc.m) if F_vals[k] != 0]
    if off:
        m_off = min(abs(Fraction(int(F_vals[k]))) for k in off)
        big = max(abs(ell[0] * P_int[k][0] + ell[1] * P_int[k][1] + ell[2]) for k in off)
        delta = m_off / (big + 1)
    else:
        delta = Fraction(1)
    A2, B2, C2 = A + delta * ell[0], B + delta * ell[1], C + delta * ell[2]
    # q < 0: g(p) = q|p|^2 + A2 x + B2 y + C2 >= 0 is a closed disk
    cx, cy = -A2 / (2 * q), -B2 / (2 * q)
    rsq = cx * cx + cy * cy - C2 / q
    center_o = loc.to_original(cx, cy)
    return Disk(center_o, rsq / (loc.den * loc.den))


def _arc_ends(ordered, keep, drop, P_int, center):
    """End points of the kept arc in cyclic order (kept set is one contiguous run)."""
    every = sorted(list(keep) + list(drop), key=cmp_to_key(lambda a, b: _angle_cmp(center)(P_int[a], P_int[b])))
    m = len(every)
    for s in range(m):
        if every[s] in keep and every[s - 1] not in keep:
            run = []
            t = s
            while every[t % m] in keep:
                run.append(every[t % m])
                t += 1
            return run[0], run[-1]
    return ordered[0], ordered[-1]


def max_disk_avoiding(P: PointSet, N: Net) -> OracleReport:
    """Heaviest closed disk (halfplanes included as limits) with no net point in it.

    Candidates are halfplanes as in :func:`max_halfplane_avoiding`, diametral
    circles of pairs and circumcircles of triples of P and N. Points on a
    candidate circle are kept along a net-free arc by a slight perturbation.
    """
    if N.family.kind != "disks":
        raise FamilyMismatchError(f"disk oracle given a {N.family} net")
    net_pts = _planar_net(P, N)
    loc = _Locations(P, net_pts, _INT64_SAFE_DISK)
    hbest, hkey, hc = _halfplane_search(loc)
    dbest, dkey, dc = _disk_search(loc, hbest)
    if dkey is None:
        witness = _halfplane_witness(loc, hkey, _bounds(P, net_pts))
        return _finish(P, net_pts, hbest, witness, hc + dc)
    if dkey[0] == "diam":
        _, i, j = dkey
        X, Y = loc.X, loc.Y
        F = (X[i] - X[j]) ** 2 + (Y[i] - Y[j]) ** 2 - ((2 * X - X[i] - X[j]) ** 2 + (2 * Y - Y[i] - Y[j]) ** 2)
    else:
        _, i, j, k = dkey
        F = _incircle_all(loc, i, j, k)
        if _orient_int(loc, i, j, k) < 0:
            F = -F
    witness = _disk_witness(loc, dkey, F)
    return _finish(P, net_pts, dbest, witness, hc + dc)


# ------------------------------------------------------------------ dispatch


def oracle_for(family: RangeFamily):
    if family.kind == "boxes":
        return max_box_avoiding
    if family.kind == "halfplanes":
        return max_halfplane_avoiding
    return max_disk_avoiding


def run_oracle(P: PointSet, N: Net) -> OracleReport:
    return oracle_for(N.family)(P, N)


def epsilon_of_net(P: PointSet, N: Net, family: RangeFamily | None = None) -> Fraction:
    """Fraction of P in the heaviest range of ``family`` that misses N."""
    if family is not None and family != N.family:
        N = Net(family, N.strong, N.members, N.claimed_eps, N.note)
    return run_oracle(P, N).fraction
