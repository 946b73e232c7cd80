import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import distinct_sets, general_sets, random_points
from smallnets.bruteforce import brute_max_avoiding
from smallnets.errors import BudgetExceededError
from smallnets.family import DISKS, HALFPLANES, Boxes, Net
from smallnets.generators import gen_box_lb, gen_rect2_lb, gen_rect3_lb, compose_far_apart
from smallnets.geometry import PointSet
from smallnets.lowerbound import (
    realizable_masks,
    sample_grid,
    verify_lower_bound,
    verify_weak_lower_bound_sampled,
)
from smallnets.oracles import run_oracle


def brute_min(P, family, i):
    return min(brute_max_avoiding(P, Net(family, True, c, 1)) for c in combinations(range(P.n), i))


@given(distinct_sets(2, 7), st.integers(0, 3))
def test_exhaustive_boxes_matches_brute(P, i):
    i = min(i, P.n)
    res = verify_lower_bound(P, Boxes(2), i)
    assert res.max_count == brute_min(P, Boxes(2), i)
    assert res.net.size == i
    assert run_oracle(P, res.net).max_count == res.max_count


@pytest.mark.parametrize("family", [HALFPLANES, DISKS])
@given(P=general_sets(3, 6), i=st.integers(1, 2))
def test_exhaustive_planar_matches_brute(family, P, i):
    res = verify_lower_bound(P, family, i)
    assert res.max_count == brute_min(P, family, i)


def test_realizable_masks_are_realizable():
    rng = random.Random(2)
    P = random_points(rng, 7, 100)
    for fam in (Boxes(2), HALFPLANES, DISKS):
        masks = set(realizable_masks(P, fam))
        for m in range(1, 1 << P.n):
            members = tuple(j for j in range(P.n) if not (m >> j) & 1)
            # m realizable iff the complement, as a net, lets a range take all of m
            ok = brute_max_avoiding(P.subset([j for j in range(P.n) if (m >> j) & 1] + list(members)), Net(fam, True, tuple(range(bin(m).count("1"), P.n)), 1)) == bin(m).count("1")
            assert (m in masks) == ok


def test_budget_exceeded_is_raised():
    rng = random.Random(0)
    P = random_points(rng, 30, 1000)
    with pytest.raises(BudgetExceededError):
        verify_lower_bound(P, Boxes(2), 5, budget=1000)


def test_trivial_net_sizes():
    P = PointSet.from_coords([(0, 0), (1, 2), (2, 1)])
    assert verify_lower_bound(P, Boxes(2), 0).max_count == 3
    assert verify_lower_bound(P, Boxes(2), 3).max_count == 0


def test_clustered_agrees_with_exhaustive_on_small_composition():
    g = compose_far_apart(gen_rect2_lb(1), gen_box_lb(2, 1))
    P = g.point_set
    ex = verify_lower_bound(P, Boxes(2), 3)
    cl = verify_lower_bound(P, Boxes(2), 3, mode="clustered", parts=g.parts)
    assert cl.max_count <= ex.max_count
    assert not cl.exact


def test_clustered_skips_but_stays_a_bound():
    g = compose_far_apart(gen_rect3_lb(1), gen_rect3_lb(1))
    full = verify_lower_bound(g.point_set, Boxes(2), 6, mode="clustered", parts=g.parts)
    tight = verify_lower_bound(g.point_set, Boxes(2), 6, mode="clustered", parts=g.parts, budget=full.ops // 3)
    assert tight.info["skipped"]
    assert tight.max_count <= full.max_count
    assert tight.report.max_count >= tight.max_count


def test_clustered_rejects_other_families():
    g = compose_far_apart(gen_rect2_lb(1), gen_box_lb(2, 1))
    with pytest.raises(ValueError):
        verify_lower_bound(g.point_set, DISKS, 2, mode="clustered", parts=g.parts)


def test_sample_grid_shape():
    P = PointSet.from_coords([(0, 0), (4, 2)])
    g = sample_grid(P, 5)
    assert len(g) == 25
    assert min(g) == (-1, -1) and max(g) == (5, 3)


def _weak_brute(P, family, i, res):
    sample = list(dict.fromkeys(list(P.points) + sample_grid(P, res)))
    return min(run_oracle(P, Net(family, False, Q, 1)).max_count for Q in combinations(sample, i))


@pytest.mark.parametrize("family", [HALFPLANES, DISKS])
@pytest.mark.parametrize("i", [1, 2])
def test_weak_sampled_matches_enumeration(family, i):
    rng = random.Random(f"{family}{i}")
    P = random_points(rng, 7, 50)
    res = verify_weak_lower_bound_sampled(P, family, i, grid_resolution=5)
    assert res.mode == "sampled"
    assert res.max_count == _weak_brute(P, family, i, 5)
    assert run_oracle(P, res.net).max_count == res.max_count


def test_weak_never_worse_than_strong():
    rng = random.Random(9)
    P = random_points(rng, 9, 100)
    for fam in (HALFPLANES, DISKS):
        weak = verify_weak_lower_bound_sampled(P, fam, 2, grid_resolution=8)
        strong = verify_lower_bound(P, fam, 2)
        assert weak.max_count <= strong.max_count


def test_weak_rejects_boxes():
    with pytest.raises(ValueError):
        verify_weak_lower_bound_sampled(PointSet.from_coords([(0, 0), (1, 1)]), Boxes(2), 1)


def test_result_serializes():
    P = PointSet.from_coords([(0, 0), (1, 2), (2, 1), (3, 3)])
    d = verify_lower_bound(P, Boxes(2), 1).to_dict()
    assert d["fraction"] == "1/2" and d["exact"]
