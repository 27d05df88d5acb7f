"""Command-line front end.

Output is deterministic for fixed inputs: no timestamps, no randomness.
Exit status 0 on success, 1 on a domain error (a machine-readable error
object goes to stderr), 2 on usage errors.
"""

import argparse
import json
import os
import sys

from . import serialize
from .errors import LietauError, PreconditionError
from .hall import hall_basis, tree_to_str, witt
from .johnson import johnson_depth, jprime_depth, tau, tau1
from .obstruction import grade_decompose, robustness_scan
from .region import holds_csv, region_table, region_text_table, rhs_csv
from .surface import SurfaceModel
from .symplectic import (eigen_pm1_condition, invariant_lagrangian_report,
                         is_symplectic)
from .words import Alphabet, surface_alphabet

CONFIG_ENV = "LIETAU_CONFIG"
_DEFAULTS = {"cap": 8, "height": 2, "format": "table", "verbosity": 0}


def load_config(path=None):
    cfg = dict(_DEFAULTS)
    path = path or os.environ.get(CONFIG_ENV)
    if path:
        with open(path) as fh:
            data = json.load(fh)
        for key in _DEFAULTS:
            if key in data:
                cfg[key] = data[key]
    if cfg["cap"] < 2:
        raise PreconditionError("config cap must be >= 2")
    if cfg["height"] < 0:
        raise PreconditionError("config height must be >= 0")
    return cfg


def _read_json_arg(arg):
    """Inline JSON if the argument looks like JSON, otherwise a file path."""
    s = arg.strip()
    if s.startswith("{") or s.startswith("["):
        return json.loads(s)
    with open(arg) as fh:
        return json.load(fh)


def _emit(text, end="\n"):
    sys.stdout.write(text + end)


def cmd_witt(args, cfg):
    _emit(str(witt(args.k, args.g)))
    return 0


def cmd_hall(args, cfg):
    if args.genus is not None:
        alphabet = surface_alphabet(args.genus)
    elif args.alphabet:
        alphabet = Alphabet(args.alphabet.split(","))
    else:
        raise PreconditionError("hall needs --genus or --alphabet")
    for t in hall_basis(args.k, len(alphabet)):
        _emit(tree_to_str(t, alphabet))
    return 0


def cmd_rank(args, cfg):
    model = SurfaceModel(args.genus)
    if args.ring == "free":
        rank, torsion = witt(args.k, 2 * args.genus), ()
    elif args.ring == "surface":
        ideal = model.symplectic_ideal()
        rank, torsion = ideal.quotient_rank(args.k), ideal.level(args.k).torsion
    else:
        ideal = model.handlebody_ideal()
        rank, torsion = ideal.quotient_rank(args.k), ideal.level(args.k).torsion
    out = {"ring": args.ring, "k": args.k, "genus": args.genus, "rank": rank,
           "torsion": list(torsion)}
    _emit(serialize.dumps(out))
    if torsion:
        sys.stderr.write("warning: torsion %r in the quotient at weight %d\n"
                         % (list(torsion), args.k))
    return 0


def cmd_depth(args, cfg):
    f = serialize.parse_mapping_class(_read_json_arg(args.map))
    cap = args.cap if args.cap is not None else cfg["cap"]
    jd = johnson_depth(f, cap)
    jp = jprime_depth(f, cap)
    fmt = lambda v: (">= %d" % cap) if v is None else ("= %d" % v)
    _emit("johnson %s, jprime %s" % (fmt(jd), fmt(jp)))
    return 0


def cmd_tau(args, cfg):
    f = serialize.parse_mapping_class(_read_json_arg(args.map))
    value = tau1(f, args.k) if args.free else tau(f, args.k)
    _emit(serialize.dumps(serialize.tau_json(value)))
    return 0


def cmd_obstruct(args, cfg):
    f = serialize.parse_mapping_class(_read_json_arg(args.map))
    lag = serialize.parse_lagrangian(_read_json_arg(args.lagrangian))
    value = tau(f, args.k)
    gd = grade_decompose(value, lag)
    out = {
        "k": args.k,
        "vanishes": gd.component(0).is_zero(),
        "grades": gd.grades(),
        "components": {str(i): serialize.tau_json(gd.component(i))
                       for i in gd.grades()},
    }
    _emit(serialize.dumps(out))
    return 0


def cmd_scan(args, cfg):
    f = serialize.parse_mapping_class(_read_json_arg(args.map))
    extra = []
    if args.lagrangians:
        for obj in _read_json_arg(args.lagrangians):
            extra.append(serialize.parse_lagrangian(obj))
    height = args.height if args.height is not None else cfg["height"]
    report = robustness_scan(f, args.k, lagrangians=extra, height=height)
    out = {
        "k": args.k,
        "scanned": report.scanned,
        "vanishing": [serialize.lagrangian_json(lag) for lag in report.vanishing],
        "nonvanishing_count": report.scanned - len(report.vanishing),
    }
    _emit(serialize.dumps(out))
    return 0


def cmd_region(args, cfg):
    fmt = args.format or cfg["format"]
    if fmt == "csv":
        _emit(rhs_csv(args.kmax, args.gmax), end="")
        _emit("")
        _emit(holds_csv(args.kmax, args.gmax), end="")
    elif fmt == "json":
        _emit(serialize.dumps([c.to_json() for c in region_table(args.kmax, args.gmax)]))
    else:
        _emit(region_text_table(args.kmax, args.gmax), end="")
    return 0


def cmd_matrix_check(args, cfg):
    mat = serialize.parse_matrix(_read_json_arg(args.matrix))
    out = {"size": len(mat), "symplectic": is_symplectic(mat)}
    if out["symplectic"]:
        out["eigen_pm1"] = eigen_pm1_condition(mat)
        report = invariant_lagrangian_report(mat, args.bound)
        out["rational_eigenvalues"] = report.rational_eigenvalues
        out["candidates_tested"] = report.candidates_tested
        out["invariant_lagrangian"] = (
            serialize.lagrangian_json(report.found) if report.found else None)
        out["pair_checks"] = [
            {"factor": pc.factor, "omega_v_vbar": pc.value_str,
             "nonzero": pc.nonzero} for pc in report.pair_checks]
        if report.notes:
            out["notes"] = report.notes
    _emit(serialize.dumps(out))
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="lietau",
        description="free Lie rings, Johnson homomorphisms, and handlebody "
                    "extension obstructions, in exact integer arithmetic")
    p.add_argument("--config", help="JSON config file (or set $%s)" % CONFIG_ENV)
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("witt", help="rank of a free Lie ring layer")
    q.add_argument("k", type=int)
    q.add_argument("g", type=int)
    q.set_defaults(fn=cmd_witt)

    q = sub.add_parser("hall", help="list a basic-commutator basis")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--genus", type=int)
    q.add_argument("--alphabet", help="comma-separated generator names")
    q.set_defaults(fn=cmd_hall)

    q = sub.add_parser("rank", help="layer rank of a graded quotient")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--genus", type=int, required=True)
    q.add_argument("--ring", choices=["free", "surface", "handlebody"],
                   default="surface")
    q.set_defaults(fn=cmd_rank)

    q = sub.add_parser("depth", help="Johnson filtration depths of a map")
    q.add_argument("--map", required=True, help="mapping class JSON (file or inline)")
    q.add_argument("--cap", type=int)
    q.set_defaults(fn=cmd_depth)

    q = sub.add_parser("tau", help="Johnson homomorphism value")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--map", required=True)
    q.add_argument("--free", action="store_true",
                   help="punctured-surface (free) coefficients")
    q.set_defaults(fn=cmd_tau)

    q = sub.add_parser("obstruct", help="handlebody obstruction for one Lagrangian")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--map", required=True)
    q.add_argument("--lagrangian", required=True)
    q.set_defaults(fn=cmd_obstruct)

    q = sub.add_parser("scan", help="obstruction over a family of Lagrangians")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--map", required=True)
    q.add_argument("--height", type=int)
    q.add_argument("--lagrangians", help="JSON array of extra Lagrangians")
    q.set_defaults(fn=cmd_scan)

    q = sub.add_parser("region", help="Witt/Levine feasibility tables")
    q.add_argument("--kmax", type=int, default=8)
    q.add_argument("--gmax", type=int, default=8)
    q.add_argument("--format", choices=["table", "json", "csv"])
    q.set_defaults(fn=cmd_region)

    q = sub.add_parser("matrix-check", help="homology-level extension checks")
    q.add_argument("--matrix", required=True, help="row-major integer matrix")
    q.add_argument("--bound", type=int, help="candidate cap for the search")
    q.set_defaults(fn=cmd_matrix_check)

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config)
        return args.fn(args, cfg)
    except LietauError as e:
        sys.stderr.write(serialize.dumps(e.to_json()) + "\n")
        return 1
    except FileNotFoundError as e:
        sys.stderr.write(serialize.dumps(
            {"error": "file-not-found", "message": str(e)}) + "\n")
        return 1
    except json.JSONDecodeError as e:
        sys.stderr.write(serialize.dumps(
            {"error": "bad-json", "message": str(e)}) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
