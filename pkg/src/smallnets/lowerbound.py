"""Minimum over all strong nets of a given size: the empirical epsilon of an instance.

Every subset of P that a range can cut out is listed once as a bitmask (the
realizable table). The worst range for a net N is then the heaviest table entry
disjoint from N, so scanning the table sorted by weight answers each net with a
handful of word-wise ANDs. The minimizing net is re-checked with the geometric
oracle, so the two code paths vouch for each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from math import comb

import numpy as np

from smallnets.errors import BudgetExceededError, DegenerateInputError, DimensionError
from smallnets.family import Net, RangeFamily
from smallnets.geometry import PointSet, fraction_str
from smallnets.oracles import (
    _INT64_SAFE_DISK,
    OracleReport,
    _angle_cmp,
    _center_of,
    _circle_function,
    _incircle_all,
    _Locations,
    _orient_int,
    run_oracle,
)

DEFAULT_BUDGET = 10**9


@dataclass
class LowerBoundResult:
    max_count: int
    n: int
    net: Net
    report: OracleReport
    nets_examined: int
    ops: int
    mode: str = "exhaustive"
    exact: bool = True
    info: dict = field(default_factory=dict)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.max_count, self.n)

    def to_dict(self):
        return {
            "mode": self.mode,
            "exact": self.exact,
            "max_count": self.max_count,
            "n": self.n,
            "fraction": fraction_str(self.fraction),
            "net": self.net.to_dict(),
            "witness": self.report.witness.to_dict(),
            "nets_examined": self.nets_examined,
            "ops": self.ops,
        }


# ----------------------------------------------------------- realizable sets


def _box_table(P: PointSet) -> set:
    if not P.distinct_coordinates():
        raise DegenerateInputError("box tables need distinct coordinates; apply rank_normalize first")
    d = P.dim
    if d > 3:
        raise DimensionError("boxes in more than three dimensions are not supported")
    masks = {0}
    bits = [1 << i for i in range(P.n)]
    by = [sorted(range(P.n), key=lambda i: P.points[i][k]) for k in range(d)]
    if d == 1:
        order = by[0]
        for a in range(P.n):
            acc = 0
            for b in range(a, P.n):
                acc |= bits[order[b]]
                masks.add(acc)
        return masks

    def runs(members):
        # all contiguous runs of ``members`` along the last axis
        seq = [i for i in by[d - 1] if i in members]
        for a in range(len(seq)):
            acc = 0
            for b in range(a, len(seq)):
                acc |= bits[seq[b]]
                masks.add(acc)

    xs = by[0]
    for a in range(P.n):
        for b in range(a, P.n):
            slab = set(xs[a : b + 1])
            if d == 2:
                runs(slab)
            else:
                zs = [i for i in by[1] if i in slab]
                for c in range(len(zs)):
                    for e in range(c, len(zs)):
                        runs(set(zs[c : e + 1]))
    return masks


def _location_bits(P: PointSet, loc: _Locations):
    index = {p: k for k, p in enumerate(loc.points)}
    bits = [0] * loc.m
    for i, p in enumerate(P.points):
        bits[index[p]] |= 1 << i
    return bits


def _mask_of(bits, idx):
    acc = 0
    for k in idx:
        acc |= bits[int(k)]
    return acc


def _halfplane_table(P: PointSet, loc: _Locations, bits) -> set:
    full = _mask_of(bits, range(loc.m))
    masks = {0, full}
    X, Y = loc.X, loc.Y
    for i, j in combinations(range(loc.m), 2):
        dx = X[j] - X[i]
        dy = Y[j] - Y[i]
        cross = dx * (Y - Y[i]) - dy * (X - X[i])
        on = np.flatnonzero(cross == 0)
        t = dx * (X[on] - X[i]) + dy * (Y[on] - Y[i])
        on = [int(on[k]) for k in sorted(range(len(on)), key=lambda k: t[k])]
        pos = _mask_of(bits, np.flatnonzero(cross > 0))
        neg = _mask_of(bits, np.flatnonzero(cross < 0))
        ends = set()
        acc = 0
        for k in on:
            ends.add(acc)
            acc |= bits[k]
        ends.add(acc)
        acc = 0
        for k in reversed(on):
            acc |= bits[k]
            ends.add(acc)
        for e in ends:
            masks.add(pos | e)
            masks.add(neg | e)
    return masks


def _cyclic_runs(bits, ring):
    out = {0}
    m = len(ring)
    for s in range(m):
        acc = 0
        for t in range(m):
            acc |= bits[ring[(s + t) % m]]
            out.add(acc)
    return out


def _circle_masks(loc, bits, F, masks):
    inside = _mask_of(bits, np.flatnonzero(F > 0))
    on = [int(k) for k in np.flatnonzero(F == 0)]
    if len(on) <= 3:
        for r in range(len(on) + 1):
            for sub in combinations(on, r):
                masks.add(inside | _mask_of(bits, sub))
        return
    pts = {k: (int(loc.X[k]), int(loc.Y[k])) for k in on}
    center = _center_of(_circle_function(loc, ("circ", on[0], on[1], on[2])))
    cmp = _angle_cmp(center)
    ring = sorted(on, key=cmp_to_key(lambda a, b: cmp(pts[a], pts[b])))
    for r in _cyclic_runs(bits, ring):
        masks.add(inside | r)


def _disk_table(P: PointSet, loc: _Locations, bits) -> set:
    masks = _halfplane_table(P, loc, bits)
    X, Y = loc.X, loc.Y
    for i, j in combinations(range(loc.m), 2):
        ex = 2 * X - X[i] - X[j]
        ey = 2 * Y - Y[i] - Y[j]
        F = (X[i] - X[j]) ** 2 + (Y[i] - Y[j]) ** 2 - (ex * ex + ey * ey)
        _circle_masks(loc, bits, F, masks)
    for i, j, k in combinations(range(loc.m), 3):
        o = _orient_int(loc, i, j, k)
        if o == 0:
            continue
        F = _incircle_all(loc, i, j, k)
        if o < 0:
            F = -F
        _circle_masks(loc, bits, F, masks)
    return masks


def realizable_masks(P: PointSet, family: RangeFamily) -> list[int]:
    """Bitmasks of every subset P ∩ R, heaviest first (ties by mask value)."""
    if family.kind == "boxes":
        if family.dim != P.dim:
            raise DimensionError("box dimension does not match the point set")
        masks = _box_table(P)
    else:
        if P.dim != 2:
            raise DimensionError("halfplanes and disks are planar")
        loc = _Locations(P, [], _INT64_SAFE_DISK)
        bits = _location_bits(P, loc)
        masks = _halfplane_table(P, loc, bits) if family.kind == "halfplanes" else _disk_table(P, loc, bits)
    return sorted(masks, key=lambda m: (-bin(m).count("1"), m))


def _to_words(masks, W):
    arr = np.zeros((len(masks), W), dtype=np.uint64)
    lo = (1 << 64) - 1
    for r, m in enumerate(masks):
        for w in range(W):
            arr[r, w] = (m >> (64 * w)) & lo
    return arr


# ------------------------------------------------------------------ scanning


_BATCH = 4096
_CELLS = 1 << 22


def _nets_to_words(combos: np.ndarray, W: int) -> np.ndarray:
    B = combos.shape[0]
    out = np.zeros((B, W), dtype=np.uint64)
    if combos.shape[1] == 0:
        return out
    rows = np.repeat(np.arange(B), combos.shape[1])
    flat = combos.ravel()
    np.bitwise_or.at(out, (rows, flat // 64), np.left_shift(np.uint64(1), (flat % 64).astype(np.uint64)))
    return out


class _Scanner:
    """Heaviest table entry disjoint from each net, with an operation budget."""

    def __init__(self, masks, n, budget):
        self.W = max(1, -(-n // 64))
        self.table = _to_words(masks, self.W)
        self.weight = np.array([bin(m).count("1") for m in masks], dtype=np.int64)
        self.budget = budget
        self.ops = 0

    def worst(self, nets: np.ndarray) -> np.ndarray:
        U = nets.shape[0]
        result = np.full(U, -1, dtype=np.int64)
        todo = np.arange(U)
        pos, chunk = 0, 64
        T = self.table
        while todo.size:
            chunk = max(64, min(chunk, _CELLS // max(1, todo.size)))
            block = T[pos : pos + chunk]
            cost = todo.size * block.shape[0] * self.W
            if self.ops + cost > self.budget:
                raise BudgetExceededError(self.ops + cost, self.budget)
            self.ops += cost
            clash = (nets[todo, None, :] & block[None, :, :]) != 0
            free = ~clash.any(axis=2)
            hit = free.any(axis=1)
            first = free.argmax(axis=1)
            result[todo[hit]] = self.weight[pos + first[hit]]
            todo = todo[~hit]
            pos += block.shape[0]
            chunk *= 2
        return result


def _combo_batches(n, i):
    it = combinations(range(n), i)
    while True:
        batch = [c for _, c in zip(range(_BATCH), it)]
        if not batch:
            return
        yield np.array(batch, dtype=np.int64).reshape(len(batch), i)


def _exhaustive_min(P: PointSet, family: RangeFamily, i: int, budget: int):
    n = P.n
    total = comb(n, i)
    if total > budget:
        raise BudgetExceededError(total, budget)
    masks = realizable_masks(P, family)
    sc = _Scanner(masks, n, budget)
    best, best_net = None, None
    for combos in _combo_batches(n, i):
        vals = sc.worst(_nets_to_words(combos, sc.W))
        k = int(np.argmin(vals))
        if best is None or vals[k] < best:
            best, best_net = int(vals[k]), tuple(int(v) for v in combos[k])
    return best, best_net, total, sc.ops, len(masks)


def verify_lower_bound(
    P: PointSet,
    family: RangeFamily,
    i: int,
    mode: str = "exhaustive",
    parts=None,
    budget: int = DEFAULT_BUDGET,
) -> LowerBoundResult:
    """Smallest worst-range fraction over all strong nets with ``i`` points.

    ``mode="clustered"`` needs ``parts`` (index lists of far-apart groups) and
    boxes; it returns a certified lower bound instead of the exact minimum.
    """
    if i < 0:
        raise ValueError("net size must be non-negative")
    if mode == "clustered":
        return _clustered(P, family, i, parts, budget)
    if mode != "exhaustive":
        raise ValueError(f"unknown mode {mode!r}")
    if i >= P.n:
        net = Net(family, True, tuple(range(P.n)), 0)
        rep = run_oracle(P, net)
        return LowerBoundResult(rep.max_count, P.n, net, rep, 1, 0)
    best, members, total, ops, tsize = _exhaustive_min(P, family, i, budget)
    net = Net(family, True, members, Fraction(best, P.n))
    rep = run_oracle(P, net)
    if rep.max_count != best:
        raise AssertionError(f"table scan says {best}, oracle says {rep.max_count} for net {members}")
    return LowerBoundResult(best, P.n, net, rep, total, ops, info={"table_size": tsize})


# ----------------------------------------------------------------- clustered


def _part_boxes_isolated(P: PointSet, parts) -> None:
    owner = {}
    for t, part in enumerate(parts):
        for idx in part:
            if idx in owner:
                raise ValueError(f"point {idx} belongs to two parts")
            owner[idx] = t
    if sorted(owner) != list(range(P.n)):
        raise ValueError("parts must cover every point exactly once")
    for t, part in enumerate(parts):
        pts = [P.points[i] for i in part]
        lo = [min(p[k] for p in pts) for k in range(P.dim)]
        hi = [max(p[k] for p in pts) for k in range(P.dim)]
        for q, o in zip(P.points, (owner[i] for i in range(P.n))):
            if o != t and all(lo[k] <= q[k] <= hi[k] for k in range(P.dim)):
                raise ValueError(f"bounding box of part {t} contains a point of part {o}")


def _clustered(P: PointSet, family: RangeFamily, i: int, parts, budget: int) -> LowerBoundResult:
    """Lower bound for instances made of far-apart parts.

    A box inside one part's bounding box never meets another part, so for a net
    with j_t points in part t the worst box holds at least max_t G_t(j_t), where
    G_t is the exhaustive minimum of part t alone. Minimizing over all splits of
    i gives a bound that is valid for every net.
    """
    from smallnets.geometry import rank_normalize

    if family.kind != "boxes":
        raise ValueError("clustered mode is implemented for boxes only")
    if not parts:
        raise ValueError("clustered mode needs the parts of the instance")
    parts = [list(p) for p in parts]
    _part_boxes_isolated(P, parts)
    # distinct part shapes; G_t(j) entries are filled cheapest first, and an
    # entry the budget cannot afford is bounded below by 0 (the value of a
    # net holding the whole part), which keeps the result a valid bound
    sigs, subs = [], {}
    for part in parts:
        sub = P.subset(part)
        sig = rank_normalize(sub).points
        sigs.append(sig)
        subs.setdefault(sig, sub)
    rows = {sig: {} for sig in subs}
    todo = []
    for sig, sub in subs.items():
        for j in range(min(i, sub.n) + 1):
            if j >= sub.n:
                rows[sig][j] = (0, tuple(range(sub.n)))
            else:
                todo.append((comb(sub.n, j) * sub.n, j, sig))
    todo.sort(key=lambda t: (t[0], t[1]))
    ops = examined = 0
    skipped = []
    for est, j, sig in todo:
        sub = subs[sig]
        try:
            best, members, total, used, _ = _exhaustive_min(sub, family, j, budget - ops)
        except BudgetExceededError as exc:
            ops = min(budget, ops + min(exc.needed, budget - ops))
            skipped.append([sub.n, j])
            continue
        ops += used
        examined += total
        rows[sig][j] = (best, members)
    if len(skipped) == len(todo) and todo:
        raise BudgetExceededError(todo[0][0], budget)
    tables = []
    for part, sig in zip(parts, sigs):
        tables.append([rows[sig].get(j, (0, None)) for j in range(min(i, len(part)) + 1)])
    cache = subs

    # dp[k] = (value, split) using k net points in the parts seen so far
    dp = {0: (0, ())}
    for row in tables:
        nxt = {}
        for k, (val, split) in dp.items():
            for j, (g, _) in enumerate(row):
                if k + j > i:
                    break
                cand = (max(val, g), split + (j,))
                if k + j not in nxt or cand[0] < nxt[k + j][0]:
                    nxt[k + j] = cand
        dp = nxt
    reach = max(k for k in dp if k <= i)
    value, split = dp[reach]
    members = []
    for part, row, j in zip(parts, tables, split):
        if row[j][1] is None:
            # skipped entry: any j points of the part do for the record
            members.extend(part[:j])
        else:
            members.extend(part[m] for m in row[j][1])
    net = Net(family, True, tuple(sorted(members)), Fraction(value, P.n))
    rep = run_oracle(P, net)
    if rep.max_count < value:
        raise AssertionError("clustered bound exceeds the oracle value of its own net")
    info = {"split": list(split), "net_max_count": rep.max_count, "distinct_parts": len(cache), "skipped": skipped}
    return LowerBoundResult(value, P.n, net, rep, examined, ops, mode="clustered", exact=False, info=info)


# ------------------------------------------------------------- weak, sampled


def sample_grid(P: PointSet, resolution: int):
    """``resolution`` x ``resolution`` lattice over P's bounding box widened by a quarter on each side."""
    if resolution < 2:
        return []
    lo = [min(p[k] for p in P.points) for k in range(2)]
    hi = [max(p[k] for p in P.points) for k in range(2)]
    ext = max(hi[0] - lo[0], hi[1] - lo[1]) or Fraction(1)
    lo = [v - ext / 4 for v in lo]
    hi = [v + ext / 4 for v in hi]
    axis = [[lo[k] + (hi[k] - lo[k]) * j / (resolution - 1) for j in range(resolution)] for k in range(2)]
    return [(x, y) for x in axis[0] for y in axis[1]]


def _weak_report(P, family, Q):
    return run_oracle(P, Net(family, False, tuple(Q), 1))


def _representative(P, family, mask):
    """A concrete range cutting out exactly the subset ``mask`` of P."""
    rest = tuple(i for i in range(P.n) if not (mask >> i) & 1)
    if not rest:
        return None
    rep = run_oracle(P, Net(family, True, rest, 1))
    return rep.witness if rep.max_count == bin(mask).count("1") else None


class _Cuts:
    """Ranges every improving net must meet, with per-sample membership bits."""

    def __init__(self, sample):
        self.sample = sample
        self.ranges = []
        self.bits = [0] * len(sample)

    def add(self, w):
        b = 1 << len(self.ranges)
        self.ranges.append(w)
        for s, q in enumerate(self.sample):
            if w.contains(q):
                self.bits[s] |= b
        return len(self.sample)

    def groups(self):
        """Sample points grouped by cut pattern, keeping only maximal patterns.

        A covering net exists iff one exists using maximal patterns only, so
        the search stays complete while the branching shrinks.
        """
        g = {}
        for s, pat in enumerate(self.bits):
            if pat:
                g.setdefault(pat, []).append(s)
        pats = sorted(g, key=lambda m: -bin(m).count("1"))
        top = []
        for m in pats:
            if not any(m & t == m for t in top):
                top.append(m)
        return [(m, g[m]) for m in top]


def _coverings(patterns, full, i, limit):
    """Up to ``limit`` index tuples of at most i patterns whose union is ``full``."""
    out = []
    seen = set()

    def rec(chosen, covered):
        if len(out) >= limit:
            return
        if covered == full:
            key = tuple(sorted(chosen))
            if key not in seen:
                seen.add(key)
                out.append(key)
            return
        if len(chosen) == i:
            return
        left = full & ~covered
        need = left & -left
        for k, (m, _) in enumerate(patterns):
            if m & need:
                rec(chosen + [k], covered | m)

    rec([], 0)
    return out


def _candidates(cover, patterns, n_sample, i):
    from itertools import product

    pools = [patterns[k][1] for k in cover]
    for base in product(*pools):
        if len(set(base)) < len(base):
            continue
        pad = i - len(base)
        if pad == 0:
            yield tuple(sorted(base))
            continue
        others = [s for s in range(n_sample) if s not in base]
        for extra in combinations(others, pad):
            yield tuple(sorted(base + extra))


def verify_weak_lower_bound_sampled(
    P: PointSet,
    family: RangeFamily = None,
    i: int = 3,
    grid_resolution: int = 40,
    budget: int = DEFAULT_BUDGET,
) -> LowerBoundResult:
    """Exact minimum over weak nets of size ``i`` drawn from P plus a lattice.

    A net Q can only beat the current best value b if it meets every range
    holding at least b points. Such ranges are collected as cuts: one per heavy
    subset of P to begin with, then the oracle witness of every candidate that
    failed. Only nets meeting all cuts are ever sent to the oracle, and the
    search ends when no net of the sample meets them all.
    """
    from smallnets.family import DISKS

    family = DISKS if family is None else family
    if family.kind == "boxes":
        raise ValueError("sampled weak verification is for halfplanes and disks")
    if P.dim != 2:
        raise DimensionError("weak sampling is planar")
    sample = list(dict.fromkeys(list(P.points) + sample_grid(P, grid_resolution)))
    info = {"sample_size": len(sample), "resolution": grid_resolution}
    if i == 0:
        rep = _weak_report(P, family, ())
        return LowerBoundResult(rep.max_count, P.n, Net(family, False, (), 1), rep, 1, 0, mode="sampled", info=info)
    if i >= len(sample):
        raise ValueError("net size exceeds the sample")
    ops = 0
    if i < P.n and comb(P.n, i) <= budget // 10:
        lb = verify_lower_bound(P, family, i, budget=budget // 10)
        ops += lb.ops
        best_q = tuple(P.points[m] for m in lb.net.members)
    else:
        best_q = tuple(sample[:i])
    best_rep = _weak_report(P, family, best_q)
    masks = realizable_masks(P, family)
    examined = 1
    seen = set()
    while best_rep.max_count > 0:
        target = best_rep.max_count
        cuts = _Cuts(sample)
        for m in masks:
            if bin(m).count("1") < target:
                break
            w = _representative(P, family, m)
            if w is not None:
                ops += cuts.add(w)
        improved = False
        while not improved:
            patterns = cuts.groups()
            full = (1 << len(cuts.ranges)) - 1
            covers = _coverings(patterns, full, i, 64)
            if not covers:
                break
            batch = []
            for cover in covers:
                for key in _candidates(cover, patterns, len(sample), i):
                    if key not in seen:
                        batch.append(key)
                        break
                if len(batch) >= 16:
                    break
            if not batch:
                break
            for key in batch:
                seen.add(key)
                cost = (i + P.n) ** 3
                if ops + cost > budget:
                    raise BudgetExceededError(ops + cost, budget)
                ops += cost
                examined += 1
                Q = tuple(sample[s] for s in key)
                rep = _weak_report(P, family, Q)
                if rep.max_count < target:
                    best_q, best_rep, improved = Q, rep, True
                    break
                ops += cuts.add(rep.witness)
        if not improved:
            break
    net = Net(family, False, best_q, best_rep.fraction)
    return LowerBoundResult(best_rep.max_count, P.n, net, best_rep, examined, ops, mode="sampled", info=info)
