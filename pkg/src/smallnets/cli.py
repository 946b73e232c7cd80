"""smallnets command line.

Exit codes: 0 pass, 1 bound violated, 2 input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from smallnets.errors import BudgetExceededError, SmallNetsError
from smallnets.family import Net, parse_family
from smallnets.generators import GENERATORS, GeneratorInstance, generate
from smallnets.geometry import PointSet, fraction_str
from smallnets.lowerbound import DEFAULT_BUDGET, verify_lower_bound, verify_weak_lower_bound_sampled
from smallnets.nets import (
    best_rect_net,
    build_box_strong_centerpoint,
    build_disk_net2,
    build_halfspace_net,
    build_rect_net2,
    build_rect_net_grid,
    build_rect_net_onept,
    slack_bound,
)
from smallnets.oracles import run_oracle, witness_from_dict

EXIT_PASS, EXIT_VIOLATED, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

METHODS = ("box-centerpoint", "rect2", "onept", "grid", "rect-best", "hull-walk", "disk2")


class InputError(Exception):
    pass


def _read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def load_points(path) -> tuple[PointSet, GeneratorInstance | None]:
    """A PointSet file, or a generator instance file (its points plus the instance)."""
    d = _read_json(path)
    if "point_set" in d:
        inst = GeneratorInstance.from_dict(d)
        return inst.point_set, inst
    return PointSet.from_dict(d), None


def _write(text: str, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=1, sort_keys=True) + "\n"


# ----------------------------------------------------------------- commands


def cmd_generate(a) -> int:
    params = {}
    fn = GENERATORS.get(a.name)
    if fn is None:
        raise InputError(f"unknown generator {a.name!r}; known: {', '.join(sorted(GENERATORS))}")
    names = fn.__code__.co_varnames[: fn.__code__.co_argcount]
    for key in names:
        val = getattr(a, key, None)
        if val is None:
            raise InputError(f"generator {a.name} needs --{key}")
        params[key] = val
    inst = generate(a.name, **params)
    _write(inst.dumps(), a.out)
    print(f"{inst.name}: n={inst.n}, i={inst.net_size}, claimed lower bound {fraction_str(inst.claimed_lower_bound)}", file=sys.stderr)
    return EXIT_PASS


def _build(P: PointSet, a) -> Net:
    m = a.method
    if m == "box-centerpoint":
        return build_box_strong_centerpoint(P, P.dim)
    if m == "rect2":
        return build_rect_net2(P)
    if m == "onept":
        return build_rect_net_onept(P, a.x, a.y)
    if m == "grid":
        return build_rect_net_grid(P, a.x, a.y, a.j, a.k)
    if m == "rect-best":
        return best_rect_net(P, a.i)
    if m == "hull-walk":
        return build_halfspace_net(P, a.i)
    if m == "disk2":
        return build_disk_net2(P, seed=a.seed)
    raise InputError(f"unknown method {m!r}")


def cmd_build(a) -> int:
    P, _ = load_points(a.points)
    net = _build(P, a)
    if a.family is not None and parse_family(a.family, P.dim) != net.family:
        raise InputError(f"method {a.method} builds {net.family} nets, not {a.family}")
    _write(_dump(net.to_dict()), a.out)
    print(f"{a.method}: {net.size} points, claimed eps {fraction_str(net.claimed_eps)}", file=sys.stderr)
    return EXIT_PASS


def cmd_verify(a) -> int:
    P, _ = load_points(a.points)
    net = Net.from_dict(_read_json(a.net))
    rep = run_oracle(P, net)
    _write(_dump(rep.to_dict()), a.out)
    limit = net.claimed_eps + slack_bound(net, P.n)
    ok = rep.fraction <= limit
    print(
        f"{net.family}: worst range avoiding the net holds {rep.max_count}/{P.n} = {float(rep.fraction):.4f}; "
        f"claimed {fraction_str(net.claimed_eps)} (+ slack {fraction_str(slack_bound(net, P.n))}): "
        f"{'pass' if ok else 'VIOLATED'}",
        file=sys.stderr,
    )
    return EXIT_PASS if ok else EXIT_VIOLATED


def cmd_lower_bound(a) -> int:
    P, inst = load_points(a.points)
    fam = parse_family(a.family, P.dim) if a.family else (inst.family if inst else None)
    if fam is None:
        raise InputError("--family is required for a plain point set")
    i = a.i if a.i is not None else (inst.net_size if inst else None)
    if i is None:
        raise InputError("--i is required for a plain point set")
    weak = a.weak or (inst is not None and inst.weak and a.i is None)
    if weak:
        res = verify_weak_lower_bound_sampled(P, fam, i, a.grid_resolution, a.budget)
    else:
        mode = a.mode
        parts = inst.parts if inst is not None else None
        if mode == "auto":
            mode = "clustered" if parts and len(parts) > 1 and fam.kind == "boxes" else "exhaustive"
        res = verify_lower_bound(P, fam, i, mode=mode, parts=parts, budget=a.budget)
    _write(_dump(res.to_dict()), a.out)
    msg = f"{res.mode}: min over {i}-point nets of the worst range = {res.max_count}/{P.n}"
    code = EXIT_PASS
    if inst is not None and i == inst.net_size and fam == inst.family:
        ok = inst.passes(res.fraction)
        msg += (
            f"; claimed {fraction_str(inst.claimed_lower_bound)} - {inst.slack}/{P.n}: "
            f"{'pass' if ok else 'VIOLATED'}"
        )
        code = EXIT_PASS if ok else EXIT_VIOLATED
    print(msg, file=sys.stderr)
    return code


def cmd_table(a) -> int:
    from smallnets.table import build_table, to_csv, to_markdown

    rows = build_table(a.which, seed=a.seed, budget=a.budget, jobs=a.jobs, trials=a.trials)
    csv_text = to_csv(rows, a.seed)
    md_text = to_markdown(rows, a.seed)
    if a.out:
        Path(a.out + ".csv").write_text(csv_text)
        Path(a.out + ".md").write_text(md_text)
    else:
        sys.stdout.write(csv_text)
    print(md_text, file=sys.stderr)
    if any(r.budget_exceeded for r in rows):
        return EXIT_BUDGET
    return EXIT_VIOLATED if any(r.status == "fail" for r in rows) else EXIT_PASS


def cmd_render(a) -> int:
    from smallnets.render import render_svg

    P, inst = load_points(a.points)
    witnesses = dict(inst.witnesses) if inst is not None else {}
    net_points = []
    if a.net:
        net = Net.from_dict(_read_json(a.net))
        net_points = net.points(P)
    if a.witness:
        d = _read_json(a.witness)
        witnesses["witness"] = witness_from_dict(d.get("witness", d))
    _write(render_svg(P, net_points, witnesses), a.out)
    return EXIT_PASS


# ------------------------------------------------------------------- parser


def _fraction(s):
    return Fraction(s)


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="smallnets", description="Small strong epsilon-nets: build, verify, bound.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a lower-bound instance as JSON")
    g.add_argument("name", help="generator name: " + ", ".join(sorted(GENERATORS)))
    for flag in ("k", "i", "d", "kk"):
        g.add_argument(f"--{flag}", type=int)
    g.add_argument("--out", default="-")
    g.set_defaults(func=cmd_generate)

    b = sub.add_parser("build", help="build a net for a point set")
    b.add_argument("points")
    b.add_argument("--method", required=True, choices=METHODS)
    b.add_argument("--family")
    for flag, default in (("i", 1), ("x", 1), ("y", 0), ("j", 0), ("k", 0), ("seed", 0)):
        b.add_argument(f"--{flag}", type=int, default=default)
    b.add_argument("--out", default="-")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="run the exact oracle against a net")
    v.add_argument("points")
    v.add_argument("net")
    v.add_argument("--out", default="-")
    v.set_defaults(func=cmd_verify)

    lb = sub.add_parser("lower-bound", help="minimum over all i-point nets of the worst range")
    lb.add_argument("points")
    lb.add_argument("--family")
    lb.add_argument("--i", type=int)
    lb.add_argument("--mode", choices=("auto", "exhaustive", "clustered"), default="auto")
    lb.add_argument("--weak", action="store_true", help="sampled weak nets (halfplanes, disks)")
    lb.add_argument("--grid-resolution", type=int, default=40)
    lb.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    lb.add_argument("--out", default="-")
    lb.set_defaults(func=cmd_lower_bound)

    t = sub.add_parser("table", help="reproduce a bounds table at desk scale")
    t.add_argument("which", choices=("rect", "summary"))
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    t.add_argument("--jobs", type=int, default=1)
    t.add_argument("--trials", type=int, default=3)
    t.add_argument("--out", help="write OUT.csv and OUT.md instead of CSV on stdout")
    t.set_defaults(func=cmd_table)

    r = sub.add_parser("render", help="draw points, a net and witnesses as SVG")
    r.add_argument("points")
    r.add_argument("--net")
    r.add_argument("--witness", help="oracle report or witness JSON")
    r.add_argument("--out", default="-")
    r.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    a = parser.parse_args(argv)
    try:
        return a.func(a)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, SmallNetsError, ValueError, KeyError, TypeError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
