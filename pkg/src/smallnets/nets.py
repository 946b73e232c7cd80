"""Constructive small strong nets.

Every builder returns a :class:`Net` of point indices and checks the counting
facts its correctness rests on before returning. Claimed values are the
divisible-case constants; with other n the oracle may exceed them by integer
rounding, bounded by ``slack_bound``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

from smallnets.errors import DegenerateInputError, DimensionError, SmallNetsError
from smallnets.family import DISKS, HALFPLANES, Boxes, Net
from smallnets.geometry import (
    PointSet,
    convex_hull,
    delaunay,
    integer_coords,
    orient2d,
    qualifying_centerpoints,
)

F = Fraction


def slack_bound(net: Net, n: int) -> Fraction:
    """Allowed excess of the measured fraction over ``claimed_eps``."""
    return F(net.size + 4, n)


def _require_distinct(P: PointSet):
    if not P.distinct_coordinates():
        raise DegenerateInputError("points share a coordinate; apply rank_normalize first")


def _order(P: PointSet, idx, axis):
    return sorted(idx, key=lambda i: P.points[i][axis])


# ------------------------------------------------------------ one point


def build_box_strong_centerpoint(P: PointSet, d: int | None = None) -> Net:
    """One point of P in the central cell left after cutting ceil(n/2d) - 1 points off every side."""
    d = P.dim if d is None else d
    if d != P.dim:
        raise DimensionError(f"points are {P.dim}-dimensional, asked for d={d}")
    if P.n < 2 * d + 1:
        raise SmallNetsError(f"need at least {2 * d + 1} points for d={d}, got {P.n}")
    _require_distinct(P)
    idx = centerpoint_index(P, range(P.n))
    # a box missing the point lies beyond it on some axis, so it also misses
    # the point itself and the whole outer slab on the other side
    m = -(-P.n // (2 * d))
    for k in range(d):
        below = sum(1 for q in P.points if q[k] <= P.points[idx][k])
        above = sum(1 for q in P.points if q[k] >= P.points[idx][k])
        assert min(below, above) >= m, "central cell point misses an outer slab"
    return Net(Boxes(d), True, (idx,), F(2 * d - 1, 2 * d))


def centerpoint_index(P: PointSet, idx) -> int:
    """Lowest-index point of ``idx`` in the central cell of the 3^d partition."""
    idx = list(idx)
    n, d = len(idx), P.dim
    cut = -(-n // (2 * d)) - 1
    outer = set()
    for k in range(d):
        o = _order(P, idx, k)
        outer.update(o[:cut])
        outer.update(o[n - cut :])
    central = [i for i in idx if i not in outer]
    assert central, "central cell is empty"
    return min(central)


# ------------------------------------------------------------ two points


def find_dominant_point(P: PointSet, idx=None, sx: int = 1, sy: int = 1) -> int:
    """Point p with at least ceil(m/2) points on each of x >= p_x and y >= p_y.

    ``sx``/``sy`` = -1 flip the corresponding inequality. ``idx`` restricts to a
    subset of P (m is its size).
    """
    if P.dim != 2:
        raise DimensionError("find_dominant_point is planar")
    idx = list(range(P.n)) if idx is None else list(idx)
    if not idx:
        raise ValueError("empty point set")

    def key(i):
        return (sx * P.points[i][0], sy * P.points[i][1])

    m = len(idx)
    h = -(-m // 2)
    by_x = sorted(idx, key=lambda i: key(i)[0])
    by_y = sorted(idx, key=lambda i: key(i)[1])
    left, bottom = set(by_x[:h]), set(by_y[:h])
    D = left & bottom
    if D:
        p = min(D)
    else:
        # left half lies wholly in the top half; take its lowest point
        p = min(left, key=lambda i: key(i)[1])
    kx, ky = key(p)
    assert sum(1 for i in idx if key(i)[0] >= kx) >= h
    assert sum(1 for i in idx if key(i)[1] >= ky) >= h
    return p


def _slabs3(P, idx, axis, outer):
    o = _order(P, idx, axis)
    return o[:outer], o[outer : len(o) - outer], o[len(o) - outer :]


def _best_small(P: PointSet, idx, size):
    """Best box net of at most ``size`` points of the subset, by exhaustive oracle."""
    from itertools import combinations

    from smallnets.oracles import max_box_avoiding

    idx = sorted(idx)
    if len(idx) <= size:
        return tuple(idx), F(0)
    sub = P.subset(idx)
    best = None
    for c in combinations(range(len(idx)), size):
        m = max_box_avoiding(sub, Net(Boxes(2), True, c, 1)).max_count
        if best is None or m < best[0]:
            best = (m, c)
    return tuple(idx[j] for j in best[1]), F(best[0], len(idx))


def build_rect_net2(P: PointSet, idx=None) -> Net:
    """At most two points: a 3x3 grid with outer slabs of floor(3n/8) points each way."""
    if P.dim != 2:
        raise DimensionError("build_rect_net2 is planar")
    _require_distinct(P)
    idx = list(range(P.n)) if idx is None else list(idx)
    n = len(idx)
    if n < 8:
        members, frac = _best_small(P, idx, 2)
        return Net(Boxes(2), True, members, frac, note="fallback: fewer than 8 points")
    outer = 3 * n // 8
    cols = _slabs3(P, idx, 0, outer)
    rows = _slabs3(P, idx, 1, outer)
    col = {i: c for c, s in enumerate(cols) for i in s}
    row = {i: r for r, s in enumerate(rows) for i in s}
    E = [i for i in idx if col[i] == 1 and row[i] == 1]
    if E:
        return Net(Boxes(2), True, (min(E),), F(5, 8), info={"case": 1})
    # 2x2 blocks of the grid: top-left, top-right, bottom-left, bottom-right
    P1 = [i for i in idx if col[i] <= 1 and row[i] >= 1]
    P2 = [i for i in idx if col[i] >= 1 and row[i] >= 1]
    P3 = [i for i in idx if col[i] <= 1 and row[i] <= 1]
    P4 = [i for i in idx if col[i] >= 1 and row[i] <= 1]
    if len(P2) + len(P3) >= len(P1) + len(P4):
        # dominant towards the centre: up-right of p in P2, down-left of q in P3
        members = [find_dominant_point(P, P2), find_dominant_point(P, P3, -1, -1)]
        case = "2/3"
    else:
        members = [find_dominant_point(P, P1, -1, 1), find_dominant_point(P, P4, 1, -1)]
        case = "1/4"
    return Net(Boxes(2), True, tuple(sorted(set(members))), F(5, 8), info={"case": case})


# ------------------------------------------------------- recursive schemes

# net size -> (scheme, parameters); sizes without a scheme reuse the one below
RECT_PLAN = {
    0: ("empty", ()),
    1: ("centerpoint", ()),
    2: ("two", ()),
    3: ("onept", (1, 0)),
    4: ("grid", (4, 2, 0, 0)),
    5: ("onept", (2, 0)),
    7: ("onept", (3, 0)),
    8: ("grid", (5, 2, 0, 1)),
    9: ("onept", (4, 0)),
    10: ("grid", (4, 2, 1, 1)),
}


def rect_plan(i: int):
    """Scheme used for a net of at most i points."""
    if i < 0:
        raise ValueError("net size must be non-negative")
    if i in RECT_PLAN:
        return RECT_PLAN[i]
    if i > 10 and i % 2 == 1:
        return ("onept", ((i - 1) // 2, 0))
    return rect_plan(i - 1)


def onept_eps(x: int, y: int) -> Fraction:
    z = (x + y) // 2
    ey, ez = rect_eps(y), rect_eps(z)
    return max(F(3, 4) * rect_eps(x), ey * ez / (ey + ez))


def grid_eps(x: int, y: int, j: int, k: int) -> Fraction:
    return max(2 * rect_eps(j) / x, rect_eps(k) / y)


@lru_cache(maxsize=None)
def rect_eps(i: int) -> Fraction:
    """Claimed value of :func:`best_rect_net` for size i, from the recursion."""
    scheme, params = rect_plan(i)
    if scheme == "empty":
        return F(1)
    if scheme == "centerpoint":
        return F(3, 4)
    if scheme == "two":
        return F(5, 8)
    if scheme == "onept":
        return onept_eps(*params)
    return grid_eps(*params)


def onept_size(x: int, y: int) -> int:
    return 2 * (x + y) + 1


def grid_size(x: int, y: int, j: int, k: int) -> int:
    return 2 * (x - 2) * (y - 1) + j * x + k * y


def _rect_members(P: PointSet, idx, i: int) -> list:
    idx = list(idx)
    if not idx or i == 0:
        return []
    if len(idx) <= i:
        return sorted(idx)
    scheme, params = rect_plan(i)
    if scheme == "empty":
        return []
    if scheme == "centerpoint":
        return [centerpoint_index(P, idx)]
    if scheme == "two":
        return list(build_rect_net2(P, idx).members)
    if scheme == "onept":
        return _onept(P, idx, *params)
    return _grid(P, idx, *params)


def _split_choice(a, b, delta, n):
    """Which of two slabs gets the big net; None if neither reaches delta*n."""
    if len(a) >= delta * n:
        return 0
    if len(b) >= delta * n:
        return 1
    return None


def _onept(P, idx, x, y) -> list:
    n = len(idx)
    z = (x + y) // 2
    ey, ez = rect_eps(y), rect_eps(z)
    delta = ey / (ey + ez)
    q = centerpoint_index(P, idx)
    qx, qy = P.points[q]
    out = {q}
    left = [i for i in idx if P.points[i][0] < qx]
    right = [i for i in idx if P.points[i][0] > qx]
    top = [i for i in idx if P.points[i][1] > qy]
    bottom = [i for i in idx if P.points[i][1] < qy]
    for a, b in ((left, right), (top, bottom)):
        big = _split_choice(a, b, delta, n)
        if big is None:
            sizes = (z, z)
        else:
            sizes = (x, y) if big == 0 else (y, x)
        out.update(_rect_members(P, a, sizes[0]))
        out.update(_rect_members(P, b, sizes[1]))
    members = sorted(out)
    assert len(members) <= onept_size(x, y)
    return members


def _even_slabs(order, parts):
    n = len(order)
    return [order[t * n // parts : (t + 1) * n // parts] for t in range(parts)]


def _grid(P, idx, x, y, j, k) -> list:
    rows = _even_slabs(_order(P, idx, 1), x)
    cols = _even_slabs(_order(P, idx, 0), y)
    lines = []
    for a, b in zip(cols, cols[1:]):
        if a and b:
            lines.append((P.points[a[-1]][0] + P.points[b[0]][0]) / 2)
    out = set()
    for H in rows[1:-1]:
        for v in lines:
            lo = [i for i in H if P.points[i][0] < v]
            hi = [i for i in H if P.points[i][0] > v]
            if lo:
                out.add(max(lo, key=lambda i: P.points[i][0]))
            if hi:
                out.add(min(hi, key=lambda i: P.points[i][0]))
    for H in rows:
        out.update(_rect_members(P, H, j))
    for V in cols:
        out.update(_rect_members(P, V, k))
    members = sorted(out)
    assert len(members) <= grid_size(x, y, j, k)
    return members


def _planar_boxes(P: PointSet):
    if P.dim != 2:
        raise DimensionError("rectangle nets are planar")
    _require_distinct(P)


def build_rect_net_onept(P: PointSet, x: int, y: int) -> Net:
    """Central point plus recursive nets on the slabs either side of it, 2(x+y)+1 points at most."""
    if not x >= y >= 0:
        raise ValueError("need x >= y >= 0")
    _planar_boxes(P)
    members = _onept(P, list(range(P.n)), x, y) if P.n > onept_size(x, y) else list(range(P.n))
    return Net(Boxes(2), True, tuple(members), onept_eps(x, y), info={"scheme": "onept", "params": [x, y]})


def build_rect_net_grid(P: PointSet, x: int, y: int, j: int, k: int) -> Net:
    """x horizontal by y vertical slabs; points flanking each grid line in the inner rows, plus slab nets."""
    if x < 2 or y < 2 or j < 0 or k < 0:
        raise ValueError("need x, y >= 2 and j, k >= 0")
    _planar_boxes(P)
    size = grid_size(x, y, j, k)
    members = _grid(P, list(range(P.n)), x, y, j, k) if P.n > size else list(range(P.n))
    return Net(Boxes(2), True, tuple(members), grid_eps(x, y, j, k), info={"scheme": "grid", "params": [x, y, j, k]})


def best_rect_net(P: PointSet, i: int) -> Net:
    """Net of at most i points using the best known scheme for that size."""
    _planar_boxes(P)
    members = _rect_members(P, list(range(P.n)), i)
    scheme, params = rect_plan(i)
    return Net(Boxes(2), True, tuple(members), rect_eps(i), info={"scheme": scheme, "params": list(params)})


# --------------------------------------------------------------- halfplanes


def build_halfspace_net(P: PointSet, i: int) -> Net:
    """At most i hull vertices; every halfplane missing them holds at most 2n/(i+1) points.

    Walk the hull clockwise from its first vertex. From the last net point x,
    the cap cut off by the chord to c_{z+1} is checked for each z in turn; the
    first time it holds more than 2n/(i+1) points, c_z joins the net. At the
    wrap-around the start vertex or the last vertex added may be redundant.
    """
    if P.dim != 2:
        raise DimensionError("halfplane nets are planar")
    if i < 1:
        raise ValueError("i must be positive")
    if P.n < 3:
        raise DegenerateInputError("need at least three points")
    hull = convex_hull(P)
    n = P.n
    if len(hull) < 3:
        members = tuple(sorted(hull[:i]))
        return _halfplane_oracle_net(P, members, "collinear input: extreme points, value by oracle")
    pts = integer_coords(P.points)

    def cap(a, b):
        # points strictly outside the chord a -> b (the hull runs clockwise);
        # with a == b nothing else is in the net, so the cap is everything else
        if a == b:
            return sum(1 for p in pts if p != pts[a])
        return sum(1 for p in pts if orient2d(pts[a], pts[b], p) > 0)

    def heavy(c):
        return c * (i + 1) > 2 * n

    m = len(hull)
    net = [0]
    x = 0
    for z in range(1, m):
        nxt = (z + 1) % m
        if heavy(cap(hull[x], hull[nxt])):
            net.append(z)
            x = z
    # wrap-around: the start vertex, then the last one, may be redundant
    if len(net) > 2 and not heavy(cap(hull[net[-1]], hull[net[1]])):
        net = net[1:]
    if len(net) > 2 and not heavy(cap(hull[net[-2]], hull[net[0]])):
        net = net[:-1]
    members = tuple(sorted(hull[t] for t in net))
    # each point lies strictly outside at most two of the chords n_{j-1} n_{j+1}
    assert len(members) <= i, f"hull walk produced {len(members)} > {i} points"
    return Net(HALFPLANES, True, members, F(2, i + 1))


def _halfplane_oracle_net(P, members, note):
    from smallnets.oracles import max_halfplane_avoiding

    rep = max_halfplane_avoiding(P, Net(HALFPLANES, True, members, 1))
    return Net(HALFPLANES, True, members, rep.fraction, note=note)


# -------------------------------------------------------------------- disks


def _locate(pts, tris, p):
    """Triangle with p strictly inside, or None when p is on the skeleton or outside."""
    for t in tris:
        a, b, c = (pts[v] for v in t)
        if orient2d(a, b, p) > 0 and orient2d(b, c, p) > 0 and orient2d(c, a, p) > 0:
            return t
    return None


def _crossed_edge(pts, edges, p, q) -> int:
    for e, (u, v) in enumerate(edges):
        U, V = pts[u], pts[v]
        if orient2d(U, V, q) < 0 and orient2d(p, q, U) * orient2d(p, q, V) <= 0:
            return e
    raise AssertionError("segment to an interior point misses every edge")


def build_disk_net2(P: PointSet, seed: int = 0) -> Net:
    """Two vertices of the Delaunay triangle holding a centerpoint.

    Of the three edges, the one crossed by the most segments from the other
    points to the centerpoint is returned. Cocircular input, or a centerpoint
    set lying wholly on the triangulation, is retried on a jittered copy
    (seeded, far smaller than any coordinate gap); the net then keeps the same
    indices and ``info`` records the seed.
    """
    if P.dim != 2:
        raise DimensionError("disk nets are planar")
    if P.n < 4:
        raise DegenerateInputError("need at least four points")
    if len(set(P.points)) != P.n:
        raise DegenerateInputError("duplicate points")
    if len(convex_hull(P)) < 3:
        raise DegenerateInputError("all points are collinear")
    Q, info = P, {}
    for attempt in range(4):
        try:
            members, info2 = _disk_net2_core(Q)
        except DegenerateInputError as exc:
            info = {"jitter_seed": seed + attempt, "reason": str(exc)}
            Q = _jitter(P, seed + attempt)
            continue
        info.update(info2)
        return Net(DISKS, True, members, F(2, 3), info=info)
    # the centerpoint region is a single point of P (or a piece of an edge), so
    # the crossing argument has nothing to cross; fall back to the best pair
    from itertools import combinations

    from smallnets.oracles import max_disk_avoiding

    best = min(
        combinations(range(P.n), 2),
        key=lambda c: max_disk_avoiding(P, Net(DISKS, True, c, 1)).max_count,
    )
    frac = max_disk_avoiding(P, Net(DISKS, True, best, 1)).fraction
    return Net(DISKS, True, best, frac, note="fallback: best pair by oracle", info=info)


def _jitter(P: PointSet, seed: int) -> PointSet:
    rng = random.Random(seed)
    vals = sorted({v for p in P.points for v in p})
    gaps = [b - a for a, b in zip(vals, vals[1:]) if b > a]
    step = (min(gaps) if gaps else F(1)) / (P.n * P.n * 1000)
    pts = [tuple(v + step * F(rng.randrange(-999, 1000), 1000) for v in p) for p in P.points]
    return PointSet(P.dim, tuple(pts), P.labels)


def _disk_net2_core(P: PointSet):
    tris = delaunay(P)
    pts = integer_coords(P.points)
    den = _common_scale(P)
    tri = center = None
    for cand in qualifying_centerpoints(P):
        ci = tuple(c * den for c in cand)
        tri = _locate(pts, tris, ci)
        if tri is not None:
            center = ci
            break
    if tri is None:
        raise DegenerateInputError("every centerpoint lies on the Delaunay skeleton")
    a, b, c = tri
    edges = [(a, b), (b, c), (c, a)]
    counts = [0, 0, 0]
    for q in range(P.n):
        if q not in tri:
            counts[_crossed_edge(pts, edges, center, pts[q])] += 1
    e = max(range(3), key=lambda t: (counts[t], -t))
    assert counts[e] >= -(-(P.n - 3) // 3), "most crossed edge is below a third"
    info = {"triangle": list(tri), "crossings": counts, "centerpoint": [str(v / den) for v in center]}
    return tuple(sorted(edges[e])), info


def _common_scale(P: PointSet) -> int:
    from math import lcm

    den = 1
    for p in P.points:
        for v in p:
            den = lcm(den, F(v).denominator)
    return den
