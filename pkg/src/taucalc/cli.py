"""Command-line driver.

Exit codes: 0 success, 2 usage or input errors, 3 inconsistent fact base.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import braid as braid_mod
from . import catalog as catalog_mod
from . import families, grid as grid_mod
from .deduce import propagate, query, replay
from .errors import InconsistentError, TaucalcError
from .report import build_report, render_report, step_to_dict


def _cmd_braid(args) -> int:
    b = braid_mod.parse_braid(args.word)
    comps = braid_mod.closure_components(b)
    print(f"strands: {b.strands}  length: {b.length}  "
          f"k+: {b.k_plus}  k-: {b.k_minus}  writhe: {b.writhe}")
    print(f"closure components: {comps}")
    if comps == 1:
        print(f"bennequin genus: {braid_mod.bennequin_genus(b)}")
        print(f"tau lower bound: {braid_mod.slice_bennequin_lower(b)}")
    if args.positive:
        v = braid_mod.tau_positive_braid(b)
        print(f"tau = {v}, g4 = {v}, g3 = {v}")
    return 0


def _cmd_grid(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        g = grid_mod.parse_grid(fh.read())
    census = grid_mod.corner_census(g)
    print(f"size: {g.size}")
    print(f"components: {grid_mod.components(g)}")
    print(f"writhe: {grid_mod.writhe_grid(g)}")
    print("corners: " + "  ".join(f"{k}: {census[k]}" for k in ("NE", "NW", "SE", "SW")))
    if grid_mod.components(g) == 1:
        print(f"tb: {grid_mod.tb(g)}")
    return 0


def _cmd_torus(args) -> int:
    print(families.tau_torus(families.TorusParams(args.p, args.q)))
    return 0


def _cmd_pretzel(args) -> int:
    v = families.pretzel_tau(families.PretzelParams(tuple(args.twists)))
    print("inapplicable" if v is None else v)
    return 0


def _cmd_double(args) -> int:
    spec = families.DoubleSpec(args.companion, args.iterations)
    v = families.whitehead_double_tau(spec, args.tb_lower)
    print("inapplicable" if v is None else v)
    return 0


def _run_deduction(base, args) -> int:
    fixed, cert = propagate(base)
    assert replay(cert, base)
    if args.query:
        rec, sub = query(fixed, cert, args.query)
        if args.json:
            out = build_report(fixed, sub, certify=args.certify)
            out["knots"] = [k for k in out["knots"] if k["id"] == args.query]
            print(json.dumps(out, indent=2))
        else:
            print(f"{rec.id}: tau = {rec.tau}, g4 = {rec.g4}, "
                  f"g3 = {rec.g3}, tb >= {rec.tb_lower}")
            for step in sub.steps:
                print("  " + step.describe())
        return 0
    report = build_report(fixed, cert, certify=args.certify)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(render_report(report))
        if args.certify:
            for step in cert.steps:
                print(step.describe())
    return 0


def _cmd_deduce(args) -> int:
    return _run_deduction(catalog_mod.load_factbase(args.facts), args)


def _cmd_catalog(args) -> int:
    return _run_deduction(catalog_mod.load_bundled_catalog(), args)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tau",
        description="Concordance invariant bounds from combinatorial knot "
                    "presentations.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("braid", help="analyze a braid word 'n: l1 l2 ...'")
    p.add_argument("word")
    p.add_argument("--positive", action="store_true",
                   help="require a positive word and print the exact invariant")
    p.set_defaults(fn=_cmd_braid)

    p = sub.add_parser("grid", help="analyze a grid diagram file")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_grid)

    p = sub.add_parser("torus", help="invariant of the (p,q) torus knot")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(fn=_cmd_torus)

    p = sub.add_parser("pretzel", help="invariant of an odd pretzel knot")
    p.add_argument("twists", type=int, nargs="+")
    p.set_defaults(fn=_cmd_pretzel)

    p = sub.add_parser("double", help="invariant of an untwisted positive "
                                      "Whitehead double")
    p.add_argument("--companion", required=True)
    p.add_argument("--tb-lower", type=int, required=True)
    p.add_argument("--iterations", type=int, default=1)
    p.set_defaults(fn=_cmd_double)

    for name, help_ in (("deduce", "propagate a fact file"),
                        ("catalog", "run the bundled catalog")):
        p = sub.add_parser(name, help=help_)
        if name == "deduce":
            p.add_argument("facts")
        p.add_argument("--certify", action="store_true",
                       help="include the full certificate")
        p.add_argument("--query", metavar="ID",
                       help="print one knot with its supporting derivation")
        p.add_argument("--json", action="store_true")
        p.set_defaults(fn=_cmd_deduce if name == "deduce" else _cmd_catalog)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InconsistentError as e:
        print(f"inconsistent: {e}", file=sys.stderr)
        return 3
    except (TaucalcError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
