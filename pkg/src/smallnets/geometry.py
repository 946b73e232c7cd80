"""Exact planar predicates, hulls, Delaunay triangles, halfplane depth and centerpoints.

Every coordinate is a :class:`fractions.Fraction`; no predicate ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterator, Sequence

from smallnets.errors import CocircularError, DegenerateInputError, DimensionError

Point = tuple  # tuple[Fraction, ...]


def to_fraction(v) -> Fraction:
    """Integers, Fractions, "p/q" and decimal strings convert exactly.

    Floats are read through their shortest repr, so ``0.1`` means 1/10.
    """
    if isinstance(v, Fraction):
        return v
    if isinstance(v, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float):
        return Fraction(repr(v))
    if isinstance(v, str):
        return Fraction(v.strip())
    raise TypeError(f"cannot read coordinate {v!r}")


def as_point(coords) -> Point:
    return tuple(to_fraction(c) for c in coords)


def fraction_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def coord_str(q: Fraction) -> str | int:
    return q.numerator if q.denominator == 1 else fraction_str(q)


@dataclass(frozen=True)
class PointSet:
    dim: int
    points: tuple
    labels: tuple | None = None

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionError("dim must be positive")
        pts = tuple(as_point(p) for p in self.points)
        for p in pts:
            if len(p) != self.dim:
                raise DimensionError(f"point {p} does not have dimension {self.dim}")
        object.__setattr__(self, "points", pts)
        if self.labels is not None:
            labels = tuple(int(v) for v in self.labels)
            if len(labels) != len(pts):
                raise ValueError("labels must have one entry per point")
            object.__setattr__(self, "labels", labels)

    @classmethod
    def from_coords(cls, coords, labels=None) -> "PointSet":
        coords = [as_point(c) for c in coords]
        if not coords:
            raise ValueError("a point set needs at least one point")
        return cls(len(coords[0]), tuple(coords), None if labels is None else tuple(labels))

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def distinct_coordinates(self) -> bool:
        for k in range(self.dim):
            col = sorted(p[k] for p in self.points)
            if any(a == b for a, b in zip(col, col[1:])):
                return False
        return True

    def subset(self, indices) -> "PointSet":
        idx = list(indices)
        labels = None if self.labels is None else tuple(self.labels[i] for i in idx)
        return PointSet(self.dim, tuple(self.points[i] for i in idx), labels)

    def to_dict(self) -> dict:
        d = {"dim": self.dim, "points": [[coord_str(c) for c in p] for p in self.points]}
        if self.labels is not None:
            d["labels"] = list(self.labels)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "PointSet":
        return cls(int(d["dim"]), tuple(as_point(p) for p in d["points"]), d.get("labels"))


def _require_2d(*pts):
    for p in pts:
        if len(p) != 2:
            raise DimensionError("planar predicate called with a non-planar point")


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def orient2d(a, b, c) -> int:
    """+1 if a, b, c turn counter-clockwise, -1 if clockwise, 0 if collinear."""
    _require_2d(a, b, c)
    return _sign((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))


def in_circle(a, b, c, d) -> int:
    """Sign of the lifted determinant; +1 means d is strictly inside circle(a, b, c) for ccw a, b, c."""
    _require_2d(a, b, c, d)
    if orient2d(a, b, c) == 0:
        raise DegenerateInputError("in_circle on collinear a, b, c")
    return _sign(_incircle_det(a, b, c, d))


def _incircle_det(a, b, c, d):
    adx, ady = a[0] - d[0], a[1] - d[1]
    bdx, bdy = b[0] - d[0], b[1] - d[1]
    cdx, cdy = c[0] - d[0], c[1] - d[1]
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    return (
        alift * (bdx * cdy - bdy * cdx)
        + blift * (cdx * ady - cdy * adx)
        + clift * (adx * bdy - ady * bdx)
    )


def integer_coords(points: Sequence[Point]) -> list[tuple[int, ...]]:
    """Scale every coordinate by the common denominator.

    A uniform positive scaling preserves every orientation, in-circle and
    ordering predicate, so the integer copy can stand in for the rationals.
    """
    den = 1
    for p in points:
        for c in p:
            den = lcm(den, Fraction(c).denominator)
    return [tuple(int(Fraction(c) * den) for c in p) for p in points]


def convex_hull(P: PointSet) -> list[int]:
    """Hull vertex indices in clockwise order, edge-interior points dropped.

    All-collinear input gives its two extreme points (one if all coincide).
    """
    if P.dim != 2:
        raise DimensionError("convex_hull is planar")
    pts = integer_coords(P.points)
    order = sorted(range(P.n), key=lambda i: (pts[i], i))
    uniq = []
    for i in order:
        if not uniq or pts[uniq[-1]] != pts[i]:
            uniq.append(i)
    if len(uniq) <= 2:
        return uniq

    def cross(o, a, b):
        return (pts[a][0] - pts[o][0]) * (pts[b][1] - pts[o][1]) - (pts[a][1] - pts[o][1]) * (
            pts[b][0] - pts[o][0]
        )

    lower, upper = [], []
    for i in uniq:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], i) <= 0:
            lower.pop()
        lower.append(i)
    for i in reversed(uniq):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], i) <= 0:
            upper.pop()
        upper.append(i)
    ccw = lower[:-1] + upper[:-1]
    if len(ccw) == 2 or all(cross(ccw[0], ccw[1], k) == 0 for k in ccw[2:]):
        return [uniq[0], uniq[-1]]
    # ccw starts at the lexicographically smallest point; keep it first
    return [ccw[0]] + ccw[:0:-1]


def delaunay(P: PointSet) -> list[tuple[int, int, int]]:
    """Brute-force Delaunay triangles as ccw index triples, smallest index first.

    A triangle is accepted iff its open circumdisk holds no other point. A point
    exactly on the circle of an otherwise empty triangle means four cocircular
    points, which has no unique answer and raises :class:`CocircularError`.
    """
    if P.dim != 2:
        raise DimensionError("delaunay is planar")
    if P.n < 3:
        raise DegenerateInputError("delaunay needs at least three points")
    pts = integer_coords(P.points)
    if len(set(pts)) != len(pts):
        raise DegenerateInputError("duplicate points")
    if len(convex_hull(P)) < 3:
        raise DegenerateInputError("all points are collinear")
    tris = []
    for a, b, c in combinations(range(P.n), 3):
        o = orient2d(pts[a], pts[b], pts[c])
        if o == 0:
            continue
        if o < 0:
            b, c = c, b
        empty = True
        on_circle = None
        pa, pb, pc = pts[a], pts[b], pts[c]
        for d in range(P.n):
            if d in (a, b, c):
                continue
            s = _sign(_incircle_det(pa, pb, pc, pts[d]))
            if s > 0:
                empty = False
                break
            if s == 0 and on_circle is None:
                on_circle = d
        if empty:
            if on_circle is not None:
                raise CocircularError(sorted((a, b, c, on_circle)))
            tris.append(_canonical_triangle(a, b, c))
    return sorted(tris)


def _canonical_triangle(a, b, c):
    m = min(a, b, c)
    while a != m:
        a, b, c = b, c, a
    return (a, b, c)


def halfplane_depth(P: PointSet, x) -> int:
    """Fewest points of P in a closed halfplane that contains x.

    The minimum is reached with x on the boundary; rotating that boundary about
    x, the count only changes when the line passes a point of P, so it is enough
    to test lines through x and each point, tilted slightly either way.
    """
    if P.dim != 2:
        raise DimensionError("halfplane_depth is planar")
    x = as_point(x)
    _require_2d(x)
    ints = integer_coords(list(P.points) + [x])
    xi = ints[-1]
    vecs = [(p[0] - xi[0], p[1] - xi[1]) for p in ints[:-1]]
    at_x = sum(1 for v in vecs if v[0] == 0 and v[1] == 0)
    others = [v for v in vecs if v[0] != 0 or v[1] != 0]
    if not others:
        return at_x
    best = len(others)
    for u in others:
        left = right = fwd = back = 0
        for v in others:
            cr = u[0] * v[1] - u[1] * v[0]
            if cr > 0:
                left += 1
            elif cr < 0:
                right += 1
            elif u[0] * v[0] + u[1] * v[1] > 0:
                fwd += 1
            else:
                back += 1
        best = min(best, min(left, right) + min(fwd, back))
    return at_x + best


def _line_intersection(p1, p2, p3, p4):
    d = (p1[0] - p2[0]) * (p3[1] - p4[1]) - (p1[1] - p2[1]) * (p3[0] - p4[0])
    if d == 0:
        return None
    a = p1[0] * p2[1] - p1[1] * p2[0]
    b = p3[0] * p4[1] - p3[1] * p4[0]
    return (
        (a * (p3[0] - p4[0]) - (p1[0] - p2[0]) * b) / d,
        (a * (p3[1] - p4[1]) - (p1[1] - p2[1]) * b) / d,
    )


def centerpoint_candidates(P: PointSet) -> Iterator[Point]:
    """Points of P, then intersections of lines through pairs of P, without repeats."""
    seen = set()
    for p in P.points:
        if p not in seen:
            seen.add(p)
            yield p
    pairs = [(i, j) for i, j in combinations(range(P.n), 2) if P.points[i] != P.points[j]]
    for s, (i, j) in enumerate(pairs):
        for k, l in pairs[s + 1 :]:
            q = _line_intersection(P.points[i], P.points[j], P.points[k], P.points[l])
            if q is not None and q not in seen:
                seen.add(q)
                yield q


def centerpoint_depth_target(n: int) -> int:
    return -(-n // 3)


def qualifying_centerpoints(P: PointSet) -> Iterator[Point]:
    target = centerpoint_depth_target(P.n)
    for q in centerpoint_candidates(P):
        if halfplane_depth(P, q) >= target:
            yield q


def centerpoint2d(P: PointSet) -> Point:
    """First candidate (in construction order) of halfplane depth at least ceil(n/3)."""
    if P.dim != 2:
        raise DimensionError("centerpoint2d is planar")
    for q in qualifying_centerpoints(P):
        return q
    raise AssertionError("no centerpoint among the candidates; Rado's theorem says this cannot happen")


def rank_normalize(P: PointSet) -> PointSet:
    """Replace each coordinate by its rank in that dimension, ties broken by index."""
    ranks = [[0] * P.dim for _ in range(P.n)]
    for k in range(P.dim):
        order = sorted(range(P.n), key=lambda i: (P.points[i][k], i))
        for r, i in enumerate(order):
            ranks[i][k] = r
    return PointSet(P.dim, tuple(tuple(Fraction(v) for v in row) for row in ranks), P.labels)
