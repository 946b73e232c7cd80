from fractions import Fraction

import pytest

from smallnets.family import DISKS, HALFPLANES, Boxes
from smallnets.generators import (
    GENERATORS,
    RECT_BASES,
    GeneratorInstance,
    compose_far_apart,
    composed_bound,
    gen_box_lb,
    gen_circle_sectors,
    gen_disk_weak3_lb,
    gen_halfspace2_lb,
    gen_halfspace_lb,
    gen_rect2_lb,
    gen_rect3_lb,
    generate,
    induction_bounds,
    induction_instance,
    rect_composed_bounds,
    regenerate,
)
from smallnets.lowerbound import verify_lower_bound
from smallnets.oracles import Box, check_witness

SMALL = [
    ("box-lb", {"d": 2, "k": 1}),
    ("box-lb", {"d": 3, "k": 1}),
    ("rect2-lb", {"k": 1}),
    ("rect3-lb", {"k": 1}),
    ("rect4-lb", {"k": 1}),
    ("rect5-lb", {"k": 1}),
    ("halfspace-lb", {"i": 1, "k": 2}),
    ("halfspace-lb", {"i": 4, "k": 1}),
    ("halfspace2-lb", {"k": 1}),
    ("circle-sectors", {"i": 4, "kk": 2}),
    ("disk-weak3-lb", {"k": 1}),
]


@pytest.mark.parametrize("name,params", SMALL)
def test_round_trip_is_byte_identical(name, params):
    g = generate(name, **params)
    text = g.dumps()
    assert GeneratorInstance.loads(text).dumps() == text
    assert regenerate(g.provenance).dumps() == text


@pytest.mark.parametrize("name,params", SMALL)
def test_witnesses_hold_only_their_points(name, params):
    g = generate(name, **params)
    P = g.point_set
    for w in g.witnesses.values():
        assert 0 < check_witness(P, [], w) <= P.n


def test_registry_names():
    assert set(GENERATORS) == {n for n, _ in SMALL}
    with pytest.raises(KeyError):
        generate("nope")


@pytest.mark.parametrize("k", [1, 2, 3])
def test_box_lb_is_exact(k):
    g = gen_box_lb(2, k)
    assert g.n == 4 * k
    assert verify_lower_bound(g.point_set, Boxes(2), 1).fraction == Fraction(3, 4)


def test_box_lb_3d():
    g = gen_box_lb(3, 1)
    assert verify_lower_bound(g.point_set, Boxes(3), 1).fraction == Fraction(5, 6)


@pytest.mark.parametrize("gen,bound", [(gen_rect2_lb, Fraction(5, 9)), (gen_rect3_lb, Fraction(2, 5))])
def test_small_rect_bounds_hold(gen, bound):
    g = gen(1)
    res = verify_lower_bound(g.point_set, g.family, g.net_size)
    assert g.claimed_lower_bound == bound
    assert g.passes(res.fraction)


@pytest.mark.parametrize("i,k", [(1, 2), (2, 2), (3, 1), (4, 1)])
def test_halfspace_lb_counts(i, k):
    g = gen_halfspace_lb(i, k)
    assert g.family == HALFPLANES and g.net_size == i
    res = verify_lower_bound(g.point_set, g.family, i)
    assert g.passes(res.fraction)


def test_halfspace2_lb():
    g = gen_halfspace2_lb(1)
    res = verify_lower_bound(g.point_set, HALFPLANES, 2)
    assert g.passes(res.fraction)


def test_circle_sectors_layout():
    g = gen_circle_sectors(4, 2)
    assert g.n == 9
    boxes = [w for w in g.witnesses.values() if isinstance(w, Box)]
    assert len(boxes) == 4
    for a in range(4):
        assert check_witness(g.point_set, [], boxes[a]) == 2
        for b in range(a + 1, 4):
            A, B = boxes[a], boxes[b]
            assert any(A.hi[t] < B.lo[t] or B.hi[t] < A.lo[t] for t in range(2))


def test_circle_sectors_needs_four():
    with pytest.raises(ValueError):
        gen_circle_sectors(3, 2)


@pytest.mark.parametrize("k", [1, 2])
def test_disk_weak3_witness_sizes(k):
    g = gen_disk_weak3_lb(k)
    assert g.weak and g.family == DISKS and g.n == 6 * k
    assert len(g.witnesses) == 6
    for w in g.witnesses.values():
        assert check_witness(g.point_set, [], w) == g.n // 3


def test_composed_bound_identity():
    for a in RECT_BASES.values():
        for b in RECT_BASES.values():
            c = composed_bound(a, b)
            assert 1 / c == 1 / a + 1 / b


def test_rect_composed_row():
    F = Fraction
    assert rect_composed_bounds() == {6: F(1, 5), 7: F(5, 29), 8: F(2, 13), 9: F(3, 22), 10: F(1, 8)}


def test_induction_families():
    rect = induction_bounds({2: Fraction(5, 9), 3: Fraction(2, 5)}, 2, 30)
    for i in range(2, 31):
        assert rect[i] >= Fraction(10, 9 * i)
    disk = induction_bounds({3: Fraction(1, 3)}, 3, 30)
    for i in range(3, 31, 3):
        assert disk[i] >= Fraction(1, i)


def test_composition_structure():
    a, b = gen_rect2_lb(1), gen_rect3_lb(1)
    g = compose_far_apart(a, b)
    assert g.net_size == 5
    assert len(g.parts) == 2
    assert g.claimed_lower_bound == composed_bound(a.claimed_lower_bound, b.claimed_lower_bound)
    assert g.point_set.distinct_coordinates()
    xs = [[g.point_set[j][0] for j in part] for part in g.parts]
    assert max(xs[0]) < min(xs[1])
    assert regenerate(g.provenance).dumps() == g.dumps()


def test_compose_rejects_mixed_families():
    with pytest.raises(ValueError):
        compose_far_apart(gen_rect2_lb(1), gen_halfspace2_lb(1))


def test_disk_induction_instance():
    g = induction_instance("disk", 6)
    assert g.n == 12 and g.claimed_lower_bound == Fraction(1, 6)
    for w in g.witnesses.values():
        assert check_witness(g.point_set, [], w) == 2


def test_rect_induction_instance_bound():
    g = induction_instance("rect", 5)
    assert g.net_size == 5
    assert g.claimed_lower_bound == composed_bound(Fraction(2, 5), Fraction(5, 9))
