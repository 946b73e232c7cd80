"""Lower-bound point configurations with their claimed bounds.

Each generator returns a :class:`GeneratorInstance` whose self-check has
already passed: cluster sizes are exact and the geometric facts the bound
relies on (separations, disjoint sector boxes, witness counts) are verified
with exact arithmetic before the instance is handed out.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from smallnets.family import DISKS, HALFPLANES, Boxes, RangeFamily
from smallnets.geometry import PointSet, fraction_str, orient2d
from smallnets.oracles import Box, Disk, Halfplane, witness_from_dict


@dataclass
class GeneratorInstance:
    point_set: PointSet
    family: RangeFamily
    net_size: int
    claimed_lower_bound: Fraction
    provenance: dict
    slack: int = 0  # c_g: measured may fall short of the claim by slack/n
    weak: bool = False
    parts: list | None = None
    witnesses: dict = field(default_factory=dict)

    def __post_init__(self):
        self.claimed_lower_bound = Fraction(self.claimed_lower_bound)
        if not 0 < self.claimed_lower_bound <= 1:
            raise ValueError("claimed lower bound must lie in (0, 1]")

    @property
    def n(self) -> int:
        return self.point_set.n

    @property
    def name(self) -> str:
        return self.provenance["name"]

    def passes(self, measured: Fraction) -> bool:
        return measured >= self.claimed_lower_bound - Fraction(self.slack, self.n)

    def to_dict(self) -> dict:
        d = {
            "provenance": self.provenance,
            "family": self.family.kind,
            "dim": self.family.dim,
            "net_size": self.net_size,
            "weak": self.weak,
            "claimed_lower_bound": fraction_str(self.claimed_lower_bound),
            "slack": self.slack,
            "point_set": self.point_set.to_dict(),
        }
        if self.parts is not None:
            d["parts"] = [list(p) for p in self.parts]
        if self.witnesses:
            d["witnesses"] = {k: w.to_dict() for k, w in self.witnesses.items()}
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "GeneratorInstance":
        return cls(
            point_set=PointSet.from_dict(d["point_set"]),
            family=RangeFamily(d["family"], int(d.get("dim", 2))),
            net_size=int(d["net_size"]),
            claimed_lower_bound=Fraction(d["claimed_lower_bound"]),
            provenance=d["provenance"],
            slack=int(d.get("slack", 0)),
            weak=bool(d.get("weak", False)),
            parts=d.get("parts"),
            witnesses={k: witness_from_dict(w) for k, w in d.get("witnesses", {}).items()},
        )

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=True) + "\n"

    @classmethod
    def loads(cls, text: str) -> "GeneratorInstance":
        return cls.from_dict(json.loads(text))


# ------------------------------------------------------------------ helpers


F = Fraction


def _check(cond, msg):
    if not cond:
        raise AssertionError(f"self-check failed: {msg}")


def _shear(points, step):
    """Move point k by (k*step, k*step/3) so no two points share a coordinate."""
    return [(p[0] + k * step, p[1] + k * step / 3) for k, p in enumerate(points)]


def _clusters(centers, k, spread):
    """k points per center on a short diagonal segment of length ``spread``."""
    pts, labels = [], []
    for c, (cx, cy) in enumerate(centers):
        for j in range(k):
            t = (j - F(k - 1, 2)) * spread / max(1, k - 1) if k > 1 else F(0)
            pts.append((F(cx) + t, F(cy) + t))
            labels.append(c)
    return pts, labels


def _segment(a, b, m):
    """m equally spaced points strictly inside segment ab."""
    return [tuple(F(a[c]) + (F(b[c]) - F(a[c])) * F(2 * t + 1, 2 * m) for c in range(2)) for t in range(m)]


def _finish_planar(pts, labels, family, i, bound, prov, slack=0, **kw):
    P = PointSet(2, tuple(pts), tuple(labels))
    inst = GeneratorInstance(P, family, i, bound, prov, slack, **kw)
    if family.kind == "boxes":
        _check(P.distinct_coordinates(), "coordinates must be distinct")
    _check(len(set(P.points)) == P.n, "points must be distinct")
    return inst


def _cluster_sizes_equal(labels, count, k):
    sizes = [labels.count(c) for c in range(count)]
    _check(sizes == [k] * count, f"cluster sizes {sizes}, expected {count} x {k}")


# --------------------------------------------------------------- rectangles


def gen_box_lb(d: int, k: int) -> GeneratorInstance:
    """2d clusters of k points at +-1 on each axis; no single point hits them all."""
    if d < 1 or k < 1:
        raise ValueError("need d >= 1 and k >= 1")
    n = 2 * d * k
    step = F(1, 10 * n * n)
    pts, labels = [], []
    for c in range(2 * d):
        axis, sign = divmod(c, 2)
        for j in range(k):
            off = (c * k + j) * step
            p = [off] * d
            p[axis] += 1 if sign == 0 else -1
            pts.append(tuple(p))
            labels.append(c)
    P = PointSet(d, tuple(pts), tuple(labels))
    _check(P.distinct_coordinates(), "coordinates must be distinct")
    _cluster_sizes_equal(list(labels), 2 * d, k)
    prov = {"name": "box-lb", "params": {"d": d, "k": k}}
    return GeneratorInstance(P, Boxes(d), 1, F(2 * d - 1, 2 * d), prov)


_DIAMOND = [(0, 1), (1, 0), (0, -1), (-1, 0)]


def gen_rect2_lb(k: int) -> GeneratorInstance:
    """Three sides of a diamond, 3k evenly spaced points on each."""
    if k < 1:
        raise ValueError("k must be positive")
    m = 3 * k
    pts, labels = [], []
    for s in range(3):
        seg = _segment(_DIAMOND[s], _DIAMOND[s + 1], m)
        pts += seg
        labels += [s] * m
    pts = _shear(pts, F(1, 10**6 * 9 * k))
    _cluster_sizes_equal(labels, 3, m)
    prov = {"name": "rect2-lb", "params": {"k": k}}
    return _finish_planar(pts, labels, Boxes(2), 2, F(5, 9), prov)


def gen_rect3_lb(k: int) -> GeneratorInstance:
    """20 clusters of k, five per side of a diamond, in cyclic order."""
    if k < 1:
        raise ValueError("k must be positive")
    pts, labels = [], []
    for s in range(4):
        seg = _segment(_DIAMOND[s], _DIAMOND[(s + 1) % 4], 5 * k)
        pts += seg
        labels += [5 * s + j // k for j in range(5 * k)]
    pts = _shear(pts, F(1, 10**6 * 20 * k))
    _cluster_sizes_equal(labels, 20, k)
    prov = {"name": "rect3-lb", "params": {"k": k}}
    return _finish_planar(pts, labels, Boxes(2), 3, F(2, 5), prov)


# top, bottom, then two tilted diamonds: top, bottom, outer, inner vertex each
_RECT4_CENTERS = [
    (0, 3),
    (0, -3),
    (-2, 1),
    (-2, -1),
    (-3, F(-1, 5)),
    (-1, F(1, 5)),
    (2, 1),
    (2, -1),
    (1, F(1, 5)),
    (3, F(-1, 5)),
]

# outer square corners, then inner diamond
_RECT5_CENTERS = [(2, 2), (-2, 2), (-2, -2), (2, -2), (1, 0), (0, 1), (-1, 0), (0, -1)]


def _cluster_instance(name, centers, k, i, bound):
    if k < 1:
        raise ValueError("k must be positive")
    n = len(centers) * k
    pts, labels = _clusters(centers, k, F(1, 10 * n))
    pts = _shear(pts, F(1, 10**6 * n))
    _cluster_sizes_equal(labels, len(centers), k)
    prov = {"name": name, "params": {"k": k}}
    return _finish_planar(pts, labels, Boxes(2), i, bound, prov)


def gen_rect4_lb(k: int) -> GeneratorInstance:
    """Ten clusters: topmost, bottommost and two quadrilaterals of four."""
    return _cluster_instance("rect4-lb", _RECT4_CENTERS, k, 4, F(3, 10))


def gen_rect5_lb(k: int) -> GeneratorInstance:
    """Eight clusters on two concentric square layers."""
    return _cluster_instance("rect5-lb", _RECT5_CENTERS, k, 5, F(1, 4))


# --------------------------------------------------------------- halfplanes


def _ratpt(t) -> tuple:
    """Rational point on the unit circle, stereographic parameter t."""
    t = F(t)
    return ((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t))


def _unit(theta: float, den: int = 10**6) -> tuple:
    """Exact unit vector close to angle theta (radians)."""
    return _ratpt(F(math.tan(theta / 2)).limit_denominator(den))


def _dot(p, q):
    return p[0] * q[0] + p[1] * q[1]


def gen_halfspace2_lb(k: int) -> GeneratorInstance:
    """3k points on a short arc of the unit circle plus 2k far below it.

    The tangent at each arc point p leaves the rest of the arc on one side and
    the far group on the other, so a 2-net must give up most of the arc.
    """
    if k < 1:
        raise ValueError("k must be positive")
    s = 3 * k
    S = [_ratpt(-1 + (j - F(s - 1, 2)) / (10 * k)) for j in range(s)]
    T = [(F(j, 10) - F(1, 10), -10 - F(j, 100)) for j in range(2 * k)]
    for p in S:
        _check(all(_dot(p, q) < 1 for q in S if q != p), "arc points lie strictly inside every tangent")
        _check(all(_dot(p, t) > 1 for t in T), "far group lies beyond every tangent")
    prov = {"name": "halfspace2-lb", "params": {"k": k}}
    return _finish_planar(S + T, [0] * s + [1] * (2 * k), HALFPLANES, 2, F(3, 5), prov, slack=1)


def _halfplane_count(P, inside):
    """Is there a closed halfplane holding exactly the indices ``inside``?"""
    from smallnets.family import Net
    from smallnets.oracles import max_halfplane_avoiding

    rest = tuple(j for j in range(P.n) if j not in inside)
    rep = max_halfplane_avoiding(P, Net(HALFPLANES, True, rest, 1))
    return rep.max_count == len(inside)


def gen_halfspace_lb(i: int, k: int) -> GeneratorInstance:
    """Clusters of 2k points on concave arcs at the corners of a regular polygon.

    (i+1)/2 clusters for odd i and (i+2)/2 for even i.
    """
    if i < 1 or k < 1:
        raise ValueError("need i >= 1 and k >= 1")
    m = (i + 1) // 2 if i % 2 else (i + 2) // 2
    bound = F(2, i + 1) if i % 2 else F(2, i + 2)
    s = 2 * k
    pts, labels = [], []
    for c in range(m):
        u = _unit(math.pi / 2 + 2 * math.pi * c / m)
        center = (15 * u[0], 15 * u[1])  # arcs bulge towards the origin
        for t in range(s):
            w = _ratpt((t - F(s - 1, 2)) / (20 * s))
            r = (w[0] * u[0] - w[1] * u[1], w[1] * u[0] + w[0] * u[1])
            pts.append((center[0] - 5 * r[0], center[1] - 5 * r[1]))
            labels.append(c)
    prov = {"name": "halfspace-lb", "params": {"i": i, "k": k}}
    inst = _finish_planar(pts, labels, HALFPLANES, i, bound, prov, slack=1)
    if m > 1:
        for c in range(m):
            members = {j for j, lab in enumerate(labels) if lab == c}
            _check(_halfplane_count(inst.point_set, members), f"cluster {c} is isolable by a halfplane")
    return inst


# ------------------------------------------------------------ circle sectors


def gen_circle_sectors(i: int, kk: int) -> GeneratorInstance:
    """n = i*kk + 1 points evenly spaced on the unit circle.

    The witnesses are i pairwise disjoint boxes, each spanning kk consecutive
    points; a net of i points leaves one of them, or the remaining point, free.
    """
    if i < 4 or kk < 1:
        raise ValueError("need i >= 4 and kk >= 1")
    n = i * kk + 1
    phase = math.pi / (3 * n)  # keeps every x and y distinct
    pts = [_unit(phase + 2 * math.pi * j / n) for j in range(n)]
    labels = [min(j // kk, i) for j in range(n)]
    witnesses = {}
    for g in range(i):
        grp = pts[g * kk : (g + 1) * kk]
        lo = tuple(min(p[c] for p in grp) for c in range(2))
        hi = tuple(max(p[c] for p in grp) for c in range(2))
        witnesses[f"S{g + 1}"] = Box(lo, hi)
    boxes = list(witnesses.values())
    for a in range(i):
        for b in range(a + 1, i):
            A, B = boxes[a], boxes[b]
            _check(any(A.hi[c] < B.lo[c] or B.hi[c] < A.lo[c] for c in range(2)), "sector boxes are disjoint")
    for g, box in enumerate(boxes):
        inside = [j for j, p in enumerate(pts) if box.contains(p)]
        _check(inside == list(range(g * kk, (g + 1) * kk)), f"sector box {g + 1} holds exactly its arc")
    prov = {"name": "circle-sectors", "params": {"i": i, "kk": kk}}
    return _finish_planar(pts, labels, Boxes(2), i, F(1, i), prov, slack=1, witnesses=witnesses)


# -------------------------------------------------------------- disks, weak

_WEAK3_RADII = (F(3), F(1))  # outer, inner; ratio 3


def _disk_around(pts, margin=F(1, 50)) -> Disk:
    cx = (sum(p[0] for p in pts) / len(pts)).limit_denominator(1000)
    cy = (sum(p[1] for p in pts) / len(pts)).limit_denominator(1000)
    r2 = max((p[0] - cx) ** 2 + (p[1] - cy) ** 2 for p in pts)
    return Disk((cx, cy), F(math.ceil(r2 * (1 + margin) * 1000), 1000))


def _halfplane_beyond(pts, margin=F(1, 50)) -> Halfplane:
    """Halfplane on the far side (from the origin) of the given points."""
    nx = (sum(p[0] for p in pts) / len(pts)).limit_denominator(1000)
    ny = (sum(p[1] for p in pts) / len(pts)).limit_denominator(1000)
    lo = min(nx * p[0] + ny * p[1] for p in pts)
    return Halfplane(-nx, -ny, -F(math.floor(lo * (1 - margin) * 1000), 1000))


def gen_disk_weak3_lb(k: int) -> GeneratorInstance:
    """Six clusters alternating between circles of radius 3 and 1, 60 degrees apart.

    Cluster 0 (outer) is topmost; 1 and 5 are the inner clusters beside it.
    The named witnesses each hold two clusters: D1, D2, D3 pair every outer
    cluster with the inner one counter-clockwise from it, D'1 pairs the top
    cluster with the inner one clockwise from it, and H12, H23 are halfplanes
    beyond two neighbouring outer clusters.
    """
    if k < 1:
        raise ValueError("k must be positive")
    outer, inner = _WEAK3_RADII
    _check(outer / inner == 3, "concentric radii ratio")
    pts, labels = [], []
    for c in range(6):
        r = outer if c % 2 == 0 else inner
        for j in range(k):
            u = _unit(math.pi / 2 + c * math.pi / 3 + (j - (k - 1) / 2) * 0.02 / k, 1000)
            pts.append((r * u[0], r * u[1]))
            labels.append(c)
    _cluster_sizes_equal(labels, 6, k)

    def grp(*cs):
        return [p for p, lab in zip(pts, labels) if lab in cs]

    witnesses = {
        "D1": _disk_around(grp(0, 1)),
        "D2": _disk_around(grp(2, 3)),
        "D3": _disk_around(grp(4, 5)),
        "D'1": _disk_around(grp(0, 5)),
        "H12": _halfplane_beyond(grp(0, 2)),
        "H23": _halfplane_beyond(grp(2, 4)),
    }
    expect = {"D1": {0, 1}, "D2": {2, 3}, "D3": {4, 5}, "D'1": {0, 5}, "H12": {0, 2}, "H23": {2, 4}}
    for name, w in witnesses.items():
        got = {lab for p, lab in zip(pts, labels) if w.contains(p)}
        cnt = sum(1 for p in pts if w.contains(p))
        _check(got == expect[name] and cnt == 2 * k, f"witness {name} holds exactly its two clusters")
    prov = {"name": "disk-weak3-lb", "params": {"k": k}}
    return _finish_planar(pts, labels, DISKS, 3, F(1, 3), prov, weak=True, witnesses=witnesses)


# -------------------------------------------------------------- composition


def composed_bound(e1, e2) -> Fraction:
    """Bound for a net of size i1 + i2 from far-apart copies with bounds e1, e2."""
    e1, e2 = F(e1), F(e2)
    return e1 * e2 / (e1 + e2)


def _extent(points):
    d = len(points[0])
    return sum(max(p[c] for p in points) - min(p[c] for p in points) for c in range(d))


def _min_gap(values):
    vals = sorted(set(values))
    gaps = [b - a for a, b in zip(vals, vals[1:])]
    return min(gaps) if gaps else F(1)


def _shift_witness(w, delta):
    if isinstance(w, Box):
        return Box(tuple(a + b for a, b in zip(w.lo, delta)), tuple(a + b for a, b in zip(w.hi, delta)))
    if isinstance(w, Disk):
        return Disk(tuple(a + b for a, b in zip(w.center, delta)), w.radius_sq)
    return Halfplane(w.a, w.b, w.c + w.a * delta[0] + w.b * delta[1])


def _as_disk(w: Halfplane, own) -> Disk:
    """Disk tangent to the halfplane's boundary, holding the same points of ``own``."""
    inside = [p for p in own if w.contains(p)]
    gx = sum(p[0] for p in own) / len(own)
    gy = sum(p[1] for p in own) / len(own)
    nn = w.a * w.a + w.b * w.b
    s = (w.a * gx + w.b * gy - w.c) / nn
    q = (gx - s * w.a, gy - s * w.b)

    def disk(t):
        return Disk((q[0] - t * w.a, q[1] - t * w.b), t * t * nn)

    def ok(t):
        # tangent disks at q are nested and lie in the halfplane
        D = disk(t)
        return all(D.contains(p) for p in inside)

    hi = F(1)
    while not ok(hi):
        hi *= 2
        _check(hi < 2**200, f"a disk can replace {w}")
    lo = hi / 2
    for _ in range(40):
        mid = ((lo + hi) / 2).limit_denominator(2**20)
        if ok(mid):
            hi = mid
        else:
            lo = mid
    D = disk(hi)
    _check(all(D.contains(p) == w.contains(p) for p in own), "tangent disk matches the halfplane")
    return D


def _join(g1: GeneratorInstance, g2: GeneratorInstance) -> GeneratorInstance:
    """Place g2 far to the right of g1, with multiplicities as given."""
    if g1.family != g2.family:
        raise ValueError("composition needs one range family")
    if not g1.family.compact:
        raise ValueError("halfplanes are not compact and cannot be composed")
    if g1.weak != g2.weak:
        raise ValueError("cannot compose a weak and a strong instance")
    A, B = list(g1.point_set.points), list(g2.point_set.points)
    d = g1.family.dim
    dx = 10 * (_extent(A) + _extent(B)) + max(p[0] for p in A) - min(p[0] for p in B)
    # the small offsets on the other axes keep coordinates distinct
    delta = (dx,) + tuple(
        (_min_gap([p[c] for p in A + B]) / 3) if c else 0 for c in range(1, d)
    )
    B = [tuple(p[c] + delta[c] for c in range(d)) for p in B]
    n1 = len(A)
    lab1 = list(g1.point_set.labels or [0] * n1)
    off = max(lab1) + 1
    lab2 = [v + off for v in (g2.point_set.labels or [0] * len(B))]
    P = PointSet(d, tuple(A + B), tuple(lab1 + lab2))
    parts1 = g1.parts or [list(range(n1))]
    parts2 = g2.parts or [list(range(len(B)))]
    parts = [list(p) for p in parts1] + [[j + n1 for j in p] for p in parts2]
    witnesses = {f"L.{k}": w for k, w in g1.witnesses.items()}
    witnesses.update({f"R.{k}": _shift_witness(w, delta) for k, w in g2.witnesses.items()})
    if g1.family.kind == "disks":
        # a halfplane would reach the far group; a big tangent disk does not
        for name, w in witnesses.items():
            if isinstance(w, Halfplane):
                witnesses[name] = _as_disk(w, A if name.startswith("L.") else B)
    for name, w in witnesses.items():
        other = B if name.startswith("L.") else A
        _check(not any(w.contains(p) for p in other), f"witness {name} excludes the far group")
    _check(max(p[0] for p in A) < min(p[0] for p in B), "groups are separated along x")
    if g1.family.kind == "boxes":
        _check(P.distinct_coordinates(), "coordinates must be distinct")
    prov = {"name": "compose", "params": {"left": g1.provenance, "right": g2.provenance}}
    bound = composed_bound(g1.claimed_lower_bound, g2.claimed_lower_bound)
    return GeneratorInstance(
        P, g1.family, g1.net_size + g2.net_size, bound, prov,
        slack=g1.slack + g2.slack + 1, weak=g1.weak, parts=parts, witnesses=witnesses,
    )


def _scaled_provenance(prov: dict, m: int) -> dict:
    params = dict(prov["params"])
    if prov["name"] == "compose":
        params["left"] = _scaled_provenance(params["left"], m)
        params["right"] = _scaled_provenance(params["right"], m)
    elif "k" in params:
        params["k"] = params["k"] * m
    else:
        raise ValueError(f"generator {prov['name']!r} has no multiplicity to scale")
    return {"name": prov["name"], "params": params}


def _unit_provenance(prov: dict) -> dict:
    if prov["name"] == "compose" or "k" not in prov["params"]:
        return prov
    return {"name": prov["name"], "params": dict(prov["params"], k=1)}


def compose_far_apart(g1: GeneratorInstance, g2: GeneratorInstance) -> GeneratorInstance:
    """Far-apart union sized so that n1 * e1 = n2 * e2, at the smallest multiplicities."""
    if g1.family != g2.family:
        raise ValueError("composition needs one range family")
    if not g1.family.compact:
        raise ValueError("halfplanes are not compact and cannot be composed")
    u1 = regenerate(_unit_provenance(g1.provenance))
    u2 = regenerate(_unit_provenance(g2.provenance))
    ratio = F(u2.n) * u2.claimed_lower_bound / (F(u1.n) * u1.claimed_lower_bound)
    m1, m2 = ratio.numerator, ratio.denominator
    left = regenerate(_scaled_provenance(u1.provenance, m1)) if m1 > 1 else u1
    right = regenerate(_scaled_provenance(u2.provenance, m2)) if m2 > 1 else u2
    _check(left.n * left.claimed_lower_bound == right.n * right.claimed_lower_bound, "side sizes in ratio")
    return _join(left, right)


# base bounds for the induction families
RECT_BASES = {1: F(3, 4), 2: F(5, 9), 3: F(2, 5), 4: F(3, 10), 5: F(1, 4)}
# (j, k) pairs whose composition gives the rectangle bounds for i = 6..10
RECT_PAIRS = {6: (3, 3), 7: (2, 5), 8: (3, 5), 9: (4, 5), 10: (5, 5)}
DISK_BASES = {2: F(1, 2), 3: F(1, 3)}


def rect_composed_bounds() -> dict:
    return {i: composed_bound(RECT_BASES[j], RECT_BASES[k]) for i, (j, k) in RECT_PAIRS.items()}


def induction_bounds(bases: dict, step: int, upto: int) -> dict:
    """Extend base bounds by repeatedly composing with the size-``step`` base."""
    out = dict(bases)
    for i in range(min(bases) + step, upto + 1):
        if i - step in out and i not in out:
            out[i] = composed_bound(out[i - step], bases[step])
    return out


def induction_instance(name: str, i: int) -> GeneratorInstance:
    """Instance for the rectangle (``rect``) or disk (``disk``) induction at size i."""
    base2, base3 = {"rect": ("rect2-lb", "rect3-lb"), "disk": (None, "disk-weak3-lb")}[name]
    if name == "disk":
        if i % 3:
            raise ValueError("disk induction instances are built from size-3 blocks")
        g = regenerate({"name": base3, "params": {"k": 1}})
        for _ in range(i // 3 - 1):
            g = compose_far_apart(g, regenerate({"name": base3, "params": {"k": 1}}))
        return g
    start = base2 if i % 2 == 0 else base3
    g = regenerate({"name": start, "params": {"k": 1}})
    for _ in range((i - (2 if i % 2 == 0 else 3)) // 2):
        g = compose_far_apart(g, regenerate({"name": base2, "params": {"k": 1}}))
    return g


# ----------------------------------------------------------------- registry

GENERATORS = {
    "box-lb": gen_box_lb,
    "rect2-lb": gen_rect2_lb,
    "rect3-lb": gen_rect3_lb,
    "rect4-lb": gen_rect4_lb,
    "rect5-lb": gen_rect5_lb,
    "halfspace-lb": gen_halfspace_lb,
    "halfspace2-lb": gen_halfspace2_lb,
    "circle-sectors": gen_circle_sectors,
    "disk-weak3-lb": gen_disk_weak3_lb,
}


def regenerate(prov: dict) -> GeneratorInstance:
    """Rebuild an instance from its provenance record."""
    name, params = prov["name"], prov["params"]
    if name == "compose":
        return _join(regenerate(params["left"]), regenerate(params["right"]))
    if name not in GENERATORS:
        raise KeyError(f"unknown generator {name!r}")
    return GENERATORS[name](**params)


def generate(name: str, **params) -> GeneratorInstance:
    if name not in GENERATORS:
        raise KeyError(f"unknown generator {name!r}; known: {', '.join(sorted(GENERATORS))}")
    return GENERATORS[name](**params)
