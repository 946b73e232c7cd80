import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import general_sets, point2, random_points
from smallnets.errors import CocircularError, DegenerateInputError, DimensionError
from smallnets.geometry import (
    PointSet,
    as_point,
    centerpoint2d,
    convex_hull,
    delaunay,
    halfplane_depth,
    in_circle,
    orient2d,
    rank_normalize,
)


def test_orient2d_basic():
    assert orient2d((0, 0), (1, 0), (0, 1)) == 1
    assert orient2d((0, 0), (1, 1), (2, 2)) == 0
    assert orient2d((0, 0), (0, 1), (1, 0)) == -1


def test_orient2d_rejects_3d():
    with pytest.raises(DimensionError):
        orient2d((0, 0, 0), (1, 0), (0, 1))


def test_orient2d_is_exact_for_tiny_offsets():
    e = Fraction(1, 10**30)
    assert orient2d((0, 0), (1, 1), (2, 2 + e)) == 1
    assert orient2d((0, 0), (1, 1), (2, 2 - e)) == -1


def test_in_circle_basic():
    a, b, c = (1, 0), (0, 1), (-1, 0)
    assert in_circle(a, b, c, (0, 0)) == 1
    assert in_circle(a, b, c, (0, -1)) == 0
    assert in_circle(a, b, c, (5, 5)) == -1


def test_in_circle_collinear_raises():
    with pytest.raises(DegenerateInputError):
        in_circle((0, 0), (1, 1), (2, 2), (0, 1))


@given(point2, point2, point2, point2)
def test_predicates_flip_under_odd_permutations(a, b, c, d):
    o = orient2d(a, b, c)
    for p in permutations([a, b, c]):
        # parity of the permutation relative to (a, b, c)
        idx = [[a, b, c].index(v) for v in p]
        inv = sum(1 for i in range(3) for j in range(i + 1, 3) if idx[i] > idx[j])
        sign = -1 if inv % 2 else 1
        assert orient2d(*p) == sign * o
        if o != 0:
            assert in_circle(*p, d) == sign * in_circle(a, b, c, d)


def test_hull_square_with_center():
    P = PointSet.from_coords([(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)])
    assert sorted(convex_hull(P)) == [0, 1, 2, 3]


def test_hull_collinear_gives_extremes():
    P = PointSet.from_coords([(0, 0), (1, 1), (2, 2)])
    assert sorted(convex_hull(P)) == [0, 2]


def test_hull_is_clockwise_and_drops_edge_points():
    P = PointSet.from_coords([(0, 0), (1, 0), (2, 0), (2, 2), (0, 2)])
    h = convex_hull(P)
    assert 1 not in h
    pts = [P[i] for i in h]
    for k in range(len(pts)):
        assert orient2d(pts[k], pts[(k + 1) % len(pts)], pts[(k + 2) % len(pts)]) == -1


@given(general_sets(3, 14))
def test_hull_contains_everything_weakly(P):
    h = convex_hull(P)
    if len(h) < 3:
        return
    pts = [P[i] for i in h]
    for k in range(len(pts)):
        a, b = pts[k], pts[(k + 1) % len(pts)]
        # clockwise hull: every point is on the right of (or on) each edge
        assert all(orient2d(a, b, q) <= 0 for q in P.points)
        assert orient2d(a, b, pts[(k + 2) % len(pts)]) < 0


def test_hull_random_30(rng):
    P = random_points(rng, 30, 1000, distinct=False)
    h = [P[i] for i in convex_hull(P)]
    for k in range(len(h)):
        assert all(orient2d(h[k], h[(k + 1) % len(h)], q) <= 0 for q in P.points)


def test_delaunay_single_triangle():
    P = PointSet.from_coords([(0, 0), (4, 0), (0, 3)])
    assert delaunay(P) == [(0, 1, 2)]


def test_delaunay_inner_point():
    P = PointSet.from_coords([(0, 0), (10, 0), (0, 10), (2, 3)])
    tris = delaunay(P)
    assert len(tris) == 3
    assert all(3 in t for t in tris)


def test_delaunay_rejects_collinear_and_cocircular():
    with pytest.raises(DegenerateInputError):
        delaunay(PointSet.from_coords([(0, 0), (1, 1), (2, 2), (3, 3)]))
    with pytest.raises(CocircularError):
        delaunay(PointSet.from_coords([(0, 0), (1, 0), (1, 1), (0, 1)]))


def _twice_area(P, t):
    a, b, c = (P[v] for v in t)
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def test_delaunay_random_25_empty_circles_and_cover(rng):
    P = random_points(rng, 25, 10**5)
    tris = delaunay(P)
    for t in tris:
        assert orient2d(*(P[v] for v in t)) == 1
        for q in range(P.n):
            if q not in t:
                assert in_circle(*(P[v] for v in t), P[q]) <= 0
    # triangles tile the hull: areas add up and the count is 2n - 2 - h
    h = convex_hull(P)
    hull_pts = [P[i] for i in h]
    hull_area = -sum(
        hull_pts[k][0] * hull_pts[(k + 1) % len(h)][1] - hull_pts[(k + 1) % len(h)][0] * hull_pts[k][1]
        for k in range(len(h))
    )
    assert sum(_twice_area(P, t) for t in tris) == hull_area
    assert len(tris) == 2 * P.n - 2 - len(h)


def _depth_brute(P, x):
    """Minimum over halfplanes through x and a point, or through two points, tilted both ways."""
    best = P.n
    cands = list(P.points) + [x]
    for a, b in combinations(cands, 2):
        if a == b:
            continue
        nx, ny = a[1] - b[1], b[0] - a[0]
        for s in (1, -1):
            # closed halfplane n.(q - a) >= 0 shifted to pass through x
            off = nx * x[0] + ny * x[1]
            cnt = sum(1 for q in P.points if s * (nx * q[0] + ny * q[1] - off) >= 0)
            best = min(best, cnt)
    # any halfplane through x is dominated by one with a point of P on its line
    return best


def test_depth_examples():
    P = PointSet.from_coords([(0, 0), (4, 0), (0, 4)])
    assert halfplane_depth(P, (0, 0)) == 1
    assert halfplane_depth(P, (10, 10)) == 0
    assert halfplane_depth(P, (1, 1)) == 1


def test_depth_matches_pairwise_lines_random(rng):
    P = random_points(rng, 20, 200, distinct=False)
    for _ in range(15):
        x = as_point((Fraction(rng.randrange(-20, 220)), Fraction(rng.randrange(-20, 220))))
        assert halfplane_depth(P, x) == _depth_brute(P, x)


@given(general_sets(1, 10), point2)
def test_depth_upper_bound(P, x):
    assert halfplane_depth(P, x) <= P.n // 2 + 1 or halfplane_depth(P, x) <= P.n and P.n <= 2


def test_centerpoint_examples(rng):
    assert centerpoint2d(PointSet.from_coords([(3, 4)])) == (3, 4)
    tri = PointSet.from_coords([(0, 0), (4, 0), (0, 4)])
    assert halfplane_depth(tri, centerpoint2d(tri)) >= 1
    P = random_points(rng, 30, 10**4)
    assert halfplane_depth(P, centerpoint2d(P)) >= 10


@given(general_sets(1, 9))
def test_centerpoint_depth_property(P):
    assert halfplane_depth(P, centerpoint2d(P)) >= -(-P.n // 3)


def test_rank_normalize_examples():
    R = rank_normalize(PointSet.from_coords([(0, 0), (0, 1)]))
    assert R.points == ((0, 0), (1, 1))
    assert R.distinct_coordinates()


@given(st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), min_size=1, max_size=12))
def test_rank_normalize_properties(pts):
    P = PointSet.from_coords(pts)
    R = rank_normalize(P)
    assert R.distinct_coordinates()
    assert rank_normalize(R) == R
    for k in range(2):
        for i in range(P.n):
            for j in range(P.n):
                if P[i][k] < P[j][k]:
                    assert R[i][k] < R[j][k]


def _box_patterns(P):
    from itertools import product

    axes = [sorted(set(p[k] for p in P.points)) for k in range(P.dim)]
    spans = [[(lo, hi) for a, lo in enumerate(ax) for hi in ax[a:]] for ax in axes]
    out = set()
    for box in product(*spans):
        out.add(frozenset(i for i, p in enumerate(P.points) if all(lo <= p[k] <= hi for k, (lo, hi) in enumerate(box))))
    return out


def test_rank_normalize_box_patterns_come_from_a_perturbation():
    rng = random.Random(5)
    pts = [(rng.randrange(4), rng.randrange(6)) for _ in range(10)]
    P = PointSet.from_coords(pts)
    R = rank_normalize(P)
    # the same perturbation written explicitly: shift each coordinate by index * tiny
    e = Fraction(1, 1000)
    Q = PointSet.from_coords([(p[0] + i * e, p[1] + i * e) for i, p in enumerate(pts)])
    assert _box_patterns(R) == _box_patterns(Q)


def test_pointset_json_round_trip():
    P = PointSet(2, ((Fraction(1, 3), Fraction(2)), (Fraction(-5, 2), Fraction(0))), (0, 1))
    assert PointSet.from_dict(P.to_dict()) == P
    Q = PointSet.from_dict({"dim": 2, "points": [["0.25", 3], ["1/3", "-2"]]})
    assert Q.points == ((Fraction(1, 4), 3), (Fraction(1, 3), -2))
