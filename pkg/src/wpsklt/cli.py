"""Command-line entry point.

Exit status: 0 when every check passes, 1 when a certified check fails,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import glct
from .acceptance import Options, run_all
from .exactmath import TABLE, display, rat_to_json
from .families import FamilyKind, build_family, validate_family
from .polyhedra import CanonicalVerdict, ExponentSet, NormalityNotCertified, canonical_newton
from .search import DEFAULT_MAX_WEIGHT, DEFAULT_TOP, search_dim2, stderr_progress
from .singular import HypersurfaceNotWellFormed, PositiveDimensionalBaseLocus, klt_certify
from .wps import CapExceeded, HypersurfaceSpec, WeightSystem, enumerate_monomials, general_hypersurface, volume_of_class

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        out = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        out = text.rstrip("\n") + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _points(text: str) -> tuple[tuple[int, ...], ...]:
    return tuple(_int_list(p) for p in text.split(";") if p.strip())


def _rat_text(x) -> str:
    x = Fraction(x)
    return f"{x} ({display(x)})"


def _load_config(path):
    if not path:
        return {}
    try:
        with open(path) as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    if not isinstance(cfg, dict):
        raise UsageError("config must be a JSON object")
    return cfg


def _apply_config(cfg: dict):
    depth = cfg.get("sylvester_depth")
    if depth is not None:
        depth = int(depth)
        if depth < 2:
            raise UsageError("sylvester_depth must be at least 2")
        TABLE.extend_to(depth + 1)
        glct.MAX_DIM = depth


def _spec_from_args(args) -> HypersurfaceSpec:
    if args.kind:
        if args.dim is None:
            raise UsageError("--kind needs --dim")
        return build_family(args.kind, args.dim).spec
    if not args.weights or args.degree is None:
        raise UsageError("give --kind/--dim or --weights/--degree")
    ws = WeightSystem(args.weights)
    if args.support:
        return HypersurfaceSpec(ws, args.degree, _points(args.support))
    return general_hypersurface(ws, args.degree)


def cmd_family(args, cfg):
    fs = build_family(args.kind, args.dim)
    rep = validate_family(fs, enumerate_support=not args.no_enumerate)
    payload = fs.to_json()
    payload["validation"] = rep.to_json()
    payload["volume"] = rat_to_json(fs.volume)
    payload["volume_decimal"] = display(fs.volume)
    text = "\n".join([f"{fs.kind.value} n={fs.n}: X_{fs.degree} in P{list(fs.weights)}",
                      f"  volume {_rat_text(fs.volume)}", rep.render()])
    _emit(args, payload, text)
    return OK if rep.ok else FAILED


def cmd_klt_check(args, cfg):
    spec = _spec_from_args(args)
    cert = klt_certify(spec, allow_positive_dimensional=not args.strict)
    _emit(args, cert.to_json(), f"X_{spec.degree} in P{list(spec.weights)}: {cert.summary()}\n"
          f"  base locus strata {list(cert.base_locus)}")
    return OK if cert.overall else FAILED


def cmd_certify_glct(args, cfg):
    cert = glct.certify_exceptional(args.dim)
    _emit(args, cert.to_json(), cert.render())
    return OK if cert.overall else FAILED


def cmd_monomials(args, cfg):
    mons = enumerate_monomials(args.weights, args.degree, cap=args.cap)
    payload = {"weights": list(args.weights), "degree": args.degree, "count": len(mons),
               "monomials": [list(m) for m in mons]}
    text = f"{len(mons)} monomials of degree {args.degree} in P{list(args.weights)}\n" + \
        "\n".join("  " + " ".join(map(str, m)) for m in mons)
    _emit(args, payload, text)
    return OK


def cmd_volume(args, cfg):
    vol = volume_of_class(WeightSystem(args.weights), args.degree, args.multiple)
    _emit(args, {"weights": list(args.weights), "degree": args.degree, "multiple": args.multiple,
                 "volume": rat_to_json(vol), "volume_decimal": display(vol)},
          f"volume {_rat_text(vol)}")
    return OK


def cmd_newton_check(args, cfg):
    pts = _points(args.points)
    if not pts or len({len(p) for p in pts}) != 1:
        raise UsageError("points must be non-empty and of one dimension")
    result = canonical_newton(ExponentSet.of(pts), assume_normal=args.assume_normal)
    payload = {"points": [list(p) for p in pts], "verdict": result.verdict.value,
               "certificate": result.certificate.to_json() if result.certificate else None}
    text = f"verdict: {result.verdict.value}"
    if result.certificate:
        c = result.certificate
        text += "\n  " + " + ".join(f"{lam}*{v}" for v, lam in c.coefficients) + f"  slack {_rat_text(c.slack)}"
    _emit(args, payload, text)
    return OK if result.verdict is CanonicalVerdict.CERTIFIED_CANONICAL else FAILED


def cmd_search(args, cfg):
    budget = cfg.get("search", {})
    max_weight = args.max_weight or int(budget.get("max_weight", DEFAULT_MAX_WEIGHT))
    workers = args.workers or int(budget.get("workers", os.cpu_count() or 1))
    top = args.top or int(budget.get("top", DEFAULT_TOP))
    res = search_dim2(args.cls, max_weight, quasi_smooth_only=args.quasi_smooth_only,
                      workers=workers, top=top, progress=None if args.quiet else stderr_progress,
                      watch=args.watch or ())
    lines = [f"{args.cls} search, max weight {max_weight}: {res.certified_count} certified"]
    for e in res.ranked:
        lines.append(f"  X_{e.degree} in P{list(e.weights)}  volume {_rat_text(e.volume)}")
    for w in args.watch or ():
        e = res.find(w)
        lines.append(f"  watched P{list(w)}: " + (f"certified, volume {_rat_text(e.volume)}" if e else "not certified"))
    lines.append("  skipped: " + ", ".join(f"{k} {v}" for k, v in sorted(res.tallies.items())))
    _emit(args, res.to_json(), "\n".join(lines))
    return OK if res.ranked else FAILED


def cmd_verify_all(args, cfg):
    budget = cfg.get("search", {})
    opts = Options(seed=args.seed,
                   workers=args.workers or int(budget.get("workers", os.cpu_count() or 1)),
                   max_weight=args.max_weight or int(budget.get("max_weight", DEFAULT_MAX_WEIGHT)))
    only = set(args.only) if args.only else None
    echo = None if args.format == "json" else (lambda line: print(line, file=sys.stderr))
    reports = run_all(opts, only, echo)
    _emit(args, {"criteria": [r.to_json() for r in reports], "ok": all(r.ok for r in reports)},
          "\n\n".join(r.render() for r in reports))
    return OK if all(r.ok for r in reports) else FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--config", help="JSON file with sylvester_depth and search budgets")

    p = argparse.ArgumentParser(prog="wpsklt", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    kinds = [k.value for k in FamilyKind]

    s = sub.add_parser("family", parents=[common], help="build and validate a family member")
    s.add_argument("--kind", choices=kinds, required=True)
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--no-enumerate", action="store_true", help="skip the full-support comparison")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("klt-check", parents=[common], help="certify klt for a family or a weighted hypersurface")
    s.add_argument("--kind", choices=kinds)
    s.add_argument("--dim", type=int)
    s.add_argument("--weights", type=_int_list)
    s.add_argument("--degree", type=int)
    s.add_argument("--support", help="monomials as 'e,e,e;e,e,e'; default is the full support")
    s.add_argument("--strict", action="store_true", help="reject positive-dimensional base loci")
    s.set_defaults(func=cmd_klt_check)

    s = sub.add_parser("certify-glct", parents=[common], help="exceptionality ledger of the fano-min family")
    s.add_argument("--dim", type=int, required=True)
    s.set_defaults(func=cmd_certify_glct)

    s = sub.add_parser("monomials", parents=[common], help="enumerate monomials of a given degree")
    s.add_argument("--weights", type=_int_list, required=True)
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--cap", type=int, default=10 ** 6)
    s.set_defaults(func=cmd_monomials)

    s = sub.add_parser("volume", parents=[common], help="volume m^n d / prod(a) of O(m)")
    s.add_argument("--weights", type=_int_list, required=True)
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--multiple", type=int, default=1)
    s.set_defaults(func=cmd_volume)

    s = sub.add_parser("newton-check", parents=[common], help="Newton polyhedron canonicity test")
    s.add_argument("--points", required=True, help="exponents as 'e,e,e;e,e,e'")
    s.add_argument("--assume-normal", action="store_true", help="skip the normality pair condition")
    s.set_defaults(func=cmd_newton_check)

    s = sub.add_parser("search", parents=[common], help="bounded surface search")
    s.add_argument("--class", dest="cls", choices=["kample", "fano"], required=True)
    s.add_argument("--max-weight", type=int)
    s.add_argument("--quasi-smooth-only", action="store_true")
    s.add_argument("--top", type=int)
    s.add_argument("--workers", type=int)
    s.add_argument("--watch", type=_points, help="also report these tuples, e.g. '177,118,49,11'")
    s.add_argument("--quiet", action="store_true", help="no progress on stderr")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("verify-all", parents=[common], help="run the acceptance suite")
    s.add_argument("--only", type=_int_list, help="criterion numbers, e.g. 1,2,5")
    s.add_argument("--seed", type=int, default=Options.seed)
    s.add_argument("--max-weight", type=int)
    s.add_argument("--workers", type=int)
    s.set_defaults(func=cmd_verify_all)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        cfg = _load_config(args.config)
        _apply_config(cfg)
        return args.func(args, cfg)
    except (NormalityNotCertified, HypersurfaceNotWellFormed, PositiveDimensionalBaseLocus,
            glct.RecursionCheckFailed) as exc:
        # valid input that the certifier refuses: a failed check, not a usage error
        print(f"wpsklt {args.command}: not certified: {exc}", file=sys.stderr)
        return FAILED
    except (UsageError, ValueError, CapExceeded) as exc:
        print(f"wpsklt {args.command}: {exc}", file=sys.stderr)
        return USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
