"""Command-line surface tying the modules into reproducible experiments.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import random
import sys
from fractions import Fraction

from . import __version__
from .bounds import bound_eval, dyadic_degree_sum, recurrence_certify
from .dual import coplanarity_audit, dual_plane, lift_circle
from .errors import CircleLensError, Inconclusive
from .families import lens_cutting, select_family, verify_cut
from .generators import GeneratorSpec, pencil_bundle_construction, random_scene
from .geometry import Circle, power_of_point
from .incidence import szekely_stats
from .pencils import brute_force_lenses, enumerate_lenses, rich_lenses
from .sceneio import parse_scene, serialize_scene
from .slopes import order_reversal_check


def _open_out(path):
    return open(path, "w", newline="") if path else sys.stdout


def _emit_rows(out, header, rows):
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _load_scene(path):
    with open(path) as fh:
        return parse_scene(fh.read())


def cmd_generate(args) -> int:
    if args.model == "bundle":
        scene, _ = pencil_bundle_construction(args.n, args.k)
    else:
        scene = random_scene(GeneratorSpec(
            model=args.model, n=args.n, k=args.k or 0,
            seed=args.seed, spread=Fraction(args.spread)))
    out = _open_out(args.out)
    out.write(serialize_scene(scene))
    if out is not sys.stdout:
        out.close()
    return 0


def cmd_lenses(args) -> int:
    scene = _load_scene(args.scene)
    lenses = enumerate_lenses(scene)
    if args.k:
        lenses = rich_lenses(lenses, args.k)
    rows = [(i, str(l.base[0].x), str(l.base[0].y),
             str(l.base[1].x), str(l.base[1].y), l.degree,
             ";".join(map(str, l.circles)))
            for i, l in enumerate(lenses)]
    out = _open_out(args.out)
    _emit_rows(out, ["index", "px", "py", "qx", "qy", "degree", "circles"], rows)
    if out is not sys.stdout:
        out.close()
    return 0


def cmd_family(args) -> int:
    scene = _load_scene(args.scene)
    lenses = rich_lenses(enumerate_lenses(scene), args.k)
    family = select_family(lenses, scene, mode=args.mode)
    bound = bound_eval("thm1-degree", n=len(scene), k=args.k)
    rows = [(len(scene), args.k, len(lenses), len(family.members),
             family.total_degree, args.mode, f"{bound:.6g}",
             f"{family.total_degree / bound:.6g}")]
    out = _open_out(args.out)
    _emit_rows(out, ["n", "k", "lenses", "family_size", "total_degree",
                     "mode", "bound_thm1", "ratio"], rows)
    if out is not sys.stdout:
        out.close()
    return 0 if family.certificate else 1


def cmd_cut(args) -> int:
    scene = _load_scene(args.scene)
    result = lens_cutting(scene, args.k)
    ok = verify_cut(scene, result)
    bound = bound_eval("thm1-degree", n=len(scene), k=args.k)
    rows = [(len(scene), args.k, result.cut_count, len(result.arcs),
             f"{bound:.6g}", f"{result.cut_count / bound:.6g}")]
    out = _open_out(args.out)
    _emit_rows(out, ["n", "k", "cut_count", "arcs", "bound_thm1_degree",
                     "ratio"], rows)
    if out is not sys.stdout:
        out.close()
    return 0 if ok else 1


def _verify_duality(args) -> int:
    rng = random.Random(args.seed)
    trials = args.n or 10000
    for _ in range(trials):
        p = (Fraction(rng.randint(-50, 50), rng.randint(1, 9)),
             Fraction(rng.randint(-50, 50), rng.randint(1, 9)))
        c = Circle(Fraction(rng.randint(-50, 50), rng.randint(1, 9)),
                   Fraction(rng.randint(-50, 50), rng.randint(1, 9)),
                   Fraction(rng.randint(1, 2500), rng.randint(1, 9)))
        on = power_of_point(p, c) == 0
        lifted = lift_circle(c)
        dual = dual_plane(p).contains((lifted.x, lifted.y, lifted.z))
        if on != dual:
            print(f"duality violation: p={p} circle={c}", file=sys.stderr)
            return 1
    print(f"duality ok over {trials} seeded pairs")
    return 0


def _verify_on_scene(args, prop) -> int:
    scene = _load_scene(args.scene)
    if prop == "oracle":
        ok = enumerate_lenses(scene) == brute_force_lenses(scene)
        print(f"oracle {'ok' if ok else 'MISMATCH'}")
        return 0 if ok else 1
    if prop == "order-reversal":
        for lens in enumerate_lenses(scene):
            try:
                if not order_reversal_check(lens, scene).reversed:
                    print(f"order reversal FAILED for {lens}")
                    return 1
            except Inconclusive:
                continue
        print("order reversal ok")
        return 0
    # coplanarity
    lenses = rich_lenses(enumerate_lenses(scene), args.k or 2)
    family = select_family(lenses, scene, mode="greedy")
    report = coplanarity_audit(scene, family)
    if report.clean:
        print(f"coplanarity audit clean over {len(family.members)} lenses")
        return 0
    print(f"coplanarity audit FLAGGED: {len(report.coplanar_triples)} triples, "
          f"{len(report.plane_violations)} plane violations")
    return 1


def cmd_verify(args) -> int:
    if args.property == "duality":
        return _verify_duality(args)
    if not args.scene:
        raise CircleLensError(f"property {args.property} needs a scene file")
    return _verify_on_scene(args, args.property)


def cmd_incidence(args) -> int:
    scene = _load_scene(args.scene)
    stats = szekely_stats(scene.points, scene, args.k)
    rows = [(stats.m, stats.n, args.k, stats.incidences, stats.edges,
             stats.g0, stats.g1, stats.max_multiplicity, stats.crossings)]
    out = _open_out(args.out)
    _emit_rows(out, ["m", "n", "k", "incidences", "edges", "g0", "g1",
                     "max_multiplicity", "crossings"], rows)
    if out is not sys.stdout:
        out.close()
    return 0


def cmd_bound(args) -> int:
    out = _open_out(args.out)
    if args.kind == "dyadic":
        total, ratio = dyadic_degree_sum(args.n, args.k, const=args.const)
        _emit_rows(out, ["kind", "n", "k", "sum", "ratio"],
                   [("dyadic", args.n, args.k, f"{total:.6g}", f"{ratio:.6g}")])
    elif args.kind == "recurrence":
        trace = recurrence_certify(args.n, args.k, a=args.const, a0=args.const0)
        _emit_rows(out, ["kind", "n", "k", "z", "depth", "certificate", "passed"],
                   [("recurrence", args.n, args.k, f"{trace.z:.6g}",
                     trace.depth, f"{trace.certificate:.6g}", trace.passed)])
        if not trace.passed:
            if out is not sys.stdout:
                out.close()
            return 1
    else:
        value = bound_eval(args.kind, n=args.n, k=args.k, m=args.m,
                           const=args.const)
        _emit_rows(out, ["kind", "n", "k", "m", "value"],
                   [(args.kind, args.n, args.k, args.m, f"{value:.6g}")])
    if out is not sys.stdout:
        out.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circlelens",
        description="Exact lens machinery for circle arrangements")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a scene file")
    p.add_argument("--model", default="bundle",
                   choices=("bundle", "uniform-random", "unit-circles-on-grid"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--spread", default="10")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("lenses", help="enumerate lenses of a scene")
    p.add_argument("scene")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_lenses)

    p = sub.add_parser("family", help="select a non-overlapping lens family")
    p.add_argument("scene")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--mode", default="greedy", choices=("greedy", "exact"))
    p.add_argument("--out")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("cut", help="cut circles until no k-rich lens remains")
    p.add_argument("scene")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--out")
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("verify", help="run an exact property check")
    p.add_argument("--property", required=True,
                   choices=("duality", "coplanarity", "order-reversal", "oracle"))
    p.add_argument("scene", nargs="?")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("incidence", help="Szekely-graph statistics of a scene")
    p.add_argument("scene")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--out")
    p.set_defaults(func=cmd_incidence)

    p = sub.add_parser("bound", help="evaluate a closed-form bound")
    p.add_argument("--kind", required=True,
                   choices=("thm1-count", "thm1-degree", "gk-degree", "mt",
                            "pt-circle", "lens-circle", "dyadic", "recurrence"))
    p.add_argument("--n", type=float, required=True)
    p.add_argument("--k", type=float, default=2)
    p.add_argument("--m", type=float, default=0)
    p.add_argument("--const", type=float, default=1.0)
    p.add_argument("--const0", type=float, default=1.0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bound)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CircleLensError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
