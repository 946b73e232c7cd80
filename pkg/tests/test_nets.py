import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import distinct_sets, general_sets, random_points
from smallnets.errors import DegenerateInputError, DimensionError, SmallNetsError
from smallnets.family import DISKS, HALFPLANES, Boxes, Net
from smallnets.geometry import PointSet, convex_hull, delaunay, in_circle
from smallnets.nets import (
    best_rect_net,
    build_box_strong_centerpoint,
    build_disk_net2,
    build_halfspace_net,
    build_rect_net2,
    build_rect_net_grid,
    build_rect_net_onept,
    find_dominant_point,
    grid_size,
    onept_size,
    rect_eps,
    slack_bound,
)
from smallnets.oracles import run_oracle

F = Fraction


def test_centerpoint_example():
    P = PointSet.from_coords([(0, 0), (1, 3), (2, 1), (3, 4), (4, 2)])
    N = build_box_strong_centerpoint(P)
    # x-extremes 0, 4 and y-extremes 0, 3 are cut off; 1 and 2 remain
    assert N.members == (1,)
    assert N.claimed_eps == F(3, 4)
    assert run_oracle(P, N).max_count <= 3


def test_centerpoint_needs_enough_points():
    with pytest.raises(SmallNetsError):
        build_box_strong_centerpoint(PointSet.from_coords([(0, 0), (1, 1)]))
    with pytest.raises(DimensionError):
        build_box_strong_centerpoint(PointSet.from_coords([(0, 0), (1, 1), (2, 2), (3, 4), (4, 3)]), 3)


@given(distinct_sets(5, 12))
def test_centerpoint_bound_property(P):
    N = build_box_strong_centerpoint(P)
    # a missing box lies on one side of the point on some axis
    assert run_oracle(P, N).max_count <= P.n - math.ceil(P.n / 4)


def test_centerpoint_3d():
    rng = random.Random(1)
    axes = [rng.sample(range(1000), 18) for _ in range(3)]
    P = PointSet.from_coords(list(zip(*axes)))
    N = build_box_strong_centerpoint(P, 3)
    assert run_oracle(P, N).max_count <= 15


@given(distinct_sets(1, 12), st.integers(0, 1), st.integers(0, 1))
def test_dominant_point_property(P, fx, fy):
    sx, sy = (1, -1)[fx], (1, -1)[fy]
    p = find_dominant_point(P, None, sx, sy)
    h = math.ceil(P.n / 2)
    assert sum(1 for q in P.points if sx * q[0] >= sx * P[p][0]) >= h
    assert sum(1 for q in P.points if sy * q[1] >= sy * P[p][1]) >= h


def test_rect_net2_central_case():
    rng = random.Random(3)
    P = random_points(rng, 40)
    N = build_rect_net2(P)
    assert N.info["case"] == 1 and N.size == 1


def test_rect_net2_ring_uses_two_points():
    # points on a circle leave the central cell empty
    pts = []
    for t in range(48):
        a = 2 * math.pi * (t + 0.37) / 48
        pts.append((round(10**6 * math.cos(a)), round(10**6 * math.sin(a))))
    P = PointSet.from_coords(pts)
    N = build_rect_net2(P)
    assert N.info["case"] in ("2/3", "1/4") and N.size == 2
    assert run_oracle(P, N).fraction <= N.claimed_eps + slack_bound(N, P.n)


@given(distinct_sets(8, 16))
def test_rect_net2_property(P):
    N = build_rect_net2(P)
    assert N.size <= 2
    assert run_oracle(P, N).fraction <= N.claimed_eps + slack_bound(N, P.n)


def test_rect_eps_row():
    assert [rect_eps(i) for i in range(1, 11)] == [
        F(3, 4), F(5, 8), F(9, 16), F(1, 2), F(15, 32), F(15, 32), F(3, 7), F(2, 5), F(5, 13), F(3, 8)
    ]


def test_scheme_sizes():
    assert onept_size(1, 0) == 3
    assert grid_size(4, 2, 0, 0) == 4
    assert grid_size(5, 2, 0, 1) == 8
    assert grid_size(4, 2, 1, 1) == 10


@pytest.mark.parametrize("i", range(1, 11))
def test_best_rect_net_random(i):
    rng = random.Random(i)
    for _ in range(2):
        P = random_points(rng, 96)
        N = best_rect_net(P, i)
        assert N.size <= i
        assert run_oracle(P, N).fraction <= N.claimed_eps + slack_bound(N, P.n)


def test_onept_and_grid_wrappers():
    rng = random.Random(8)
    P = random_points(rng, 64)
    a = build_rect_net_onept(P, 1, 0)
    b = build_rect_net_grid(P, 4, 2, 0, 0)
    assert a.size <= 3 and a.claimed_eps == F(9, 16)
    assert b.size <= 4 and b.claimed_eps == F(1, 2)
    with pytest.raises(ValueError):
        build_rect_net_onept(P, 0, 1)


def test_rect_builders_need_distinct_coordinates():
    P = PointSet.from_coords([(0, 0), (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)])
    with pytest.raises(DegenerateInputError):
        build_rect_net2(P)


def test_halfspace_square():
    P = PointSet.from_coords([(0, 0), (2, 0), (2, 2), (0, 2), (1, 1)])
    N = build_halfspace_net(P, 2)
    assert N.size <= 2
    assert set(N.members) <= set(convex_hull(P))


@given(general_sets(3, 12), st.integers(1, 6))
def test_halfspace_net_property(P, i):
    N = build_halfspace_net(P, i)
    assert N.size <= i
    if not N.note:
        assert run_oracle(P, N).max_count <= math.ceil(2 * P.n / (i + 1))


def test_halfspace_convex_position():
    pts = [(round(10**5 * math.cos(2 * math.pi * t / 30)), round(10**5 * math.sin(2 * math.pi * t / 30))) for t in range(30)]
    P = PointSet.from_coords(pts)
    for i in range(1, 9):
        N = build_halfspace_net(P, i)
        assert N.size <= i
        assert run_oracle(P, N).max_count <= math.ceil(2 * P.n / (i + 1))


def test_disk_net2_random():
    rng = random.Random(6)
    for _ in range(3):
        P = random_points(rng, 24, 10**4)
        N = build_disk_net2(P)
        assert N.size == 2
        assert run_oracle(P, N).max_count <= math.ceil(2 * P.n / 3)
        if not N.note:
            a, b, c = N.info["triangle"]
            assert set(N.members) <= {a, b, c}
            assert max(N.info["crossings"]) >= math.ceil((P.n - 3) / 3)


def test_disk_net2_cocircular_input_is_jittered():
    pts = [(0, 0), (4, 0), (4, 4), (0, 4), (1, 2), (3, 1), (2, 3)]
    P = PointSet.from_coords(pts)
    N = build_disk_net2(P)
    assert N.size == 2
    assert run_oracle(P, N).max_count <= math.ceil(2 * P.n / 3)


def test_disk_net2_rejects_bad_input():
    with pytest.raises(DegenerateInputError):
        build_disk_net2(PointSet.from_coords([(0, 0), (1, 1), (2, 2), (3, 3)]))
    with pytest.raises(DegenerateInputError):
        build_disk_net2(PointSet.from_coords([(0, 0), (1, 0), (0, 1)]))


def test_net_serialization():
    N = Net(DISKS, False, ((F(1, 2), 3),), F(1, 3))
    assert Net.from_dict(N.to_dict()) == N
    with pytest.raises(ValueError):
        Net(Boxes(2), True, (1, 1), F(1, 2))
