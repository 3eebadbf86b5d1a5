"""Command-line front end: ``pfhilbert <subcommand> [flags]``.

Exit codes: 0 success, 1 usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .checks import CAPS, FAULTS, VerifyConfig, run_verification
from .exact_arith import ParameterError
from .hilbert import HFunMethod, NumeratorMethod, hfun_coefficients, hilbert_function, hilbert_series
from .multiplicity import ALL_METHODS, all_multiplicities, dimension, mult
from .params import FORMULA_VALID, RingParams
from .records import ResultCache, compute_record, default_cache_path, parse_sweep_spec

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(obj, fmt: str, text: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, separators=(",", ":")))
    else:
        print(text)


def _params(args) -> RingParams:
    try:
        return RingParams(args.n, args.r)
    except ParameterError as exc:
        raise UsageError(str(exc)) from None


def cmd_series(args) -> int:
    p = _params(args)
    s = hilbert_series(p, args.method)
    obj = {
        "numerator": [str(c) for c in s.numerator],
        "denom_exponent": s.denom_exponent,
        "n": p.n,
        "r": p.r,
        "class": p.kind,
        "method": args.method,
    }
    text = "\n".join([
        f"ring: n={p.n}, r={p.r} ({p.kind})",
        f"numerator: {' '.join(str(c) for c in s.numerator)}",
        f"denominator exponent: {s.denom_exponent}",
        f"H(z) = {s}",
    ])
    _emit(obj, args.format, text)
    return EXIT_OK


def cmd_hvector(args) -> int:
    p = _params(args)
    s = hilbert_series(p, args.method)
    obj = {"n": p.n, "r": p.r, "class": p.kind, "h_vector": [str(c) for c in s.h_vector],
           "dimension": s.dimension, "multiplicity": str(s.multiplicity)}
    text = f"h-vector: {' '.join(str(c) for c in s.h_vector)}\ndimension: {s.dimension}\nmultiplicity: {s.multiplicity}"
    _emit(obj, args.format, text)
    return EXIT_OK


def cmd_hfunction(args) -> int:
    p = _params(args)
    if args.ell < 0:
        raise UsageError("--ell must be nonnegative")
    value = hilbert_function(p, args.ell, args.method)
    obj = {"n": p.n, "r": p.r, "ell": args.ell, "method": args.method, "value": str(value)}
    if args.method in ("F", "G", "H") and p.formula_valid:
        obj["coefficients"] = {str(k): str(v) for k, v in sorted(hfun_coefficients(p, args.method).items())}
    _emit(obj, args.format, f"dim R_{args.ell} = {value}")
    return EXIT_OK


def cmd_multiplicity(args) -> int:
    p = _params(args)
    if p.kind != FORMULA_VALID:
        values = {m: None for m in ALL_METHODS} if args.method == "all" else {args.method: None}
        e = hilbert_series(p).multiplicity
    elif args.method == "all":
        values = all_multiplicities(p)
        e = values["product45"]
    else:
        values = {args.method: mult(p, args.method, verbatim=args.verbatim)}
        e = values[args.method]
    obj = {"n": p.n, "r": p.r, "class": p.kind, "dimension": dimension(p), "multiplicity": str(e),
           "methods": {k: None if v is None else str(v) for k, v in values.items()}}
    lines = [f"dimension: {dimension(p)}", f"multiplicity: {e}"]
    lines += [f"  {k:<13} {'n/a' if v is None else v}" for k, v in values.items()]
    _emit(obj, args.format, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    cfg = VerifyConfig(
        max_n=args.max_n,
        oracle_max_n=min(args.oracle_max_n, args.max_n),
        faces_max_n=min(args.faces_max_n, args.max_n),
        fiber_max_n=min(args.fiber_max_n, args.faces_max_n, args.max_n),
        mult_max_n=args.mult_max_n,
        pfaffian_samples=args.pfaffian_samples,
        seed=args.seed,
        fault=args.inject_fault,
    )
    try:
        cfg.validate()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = run_verification(cfg)
    if args.format == "json":
        print(json.dumps({
            "ok": report.ok,
            "checks": [{"name": r.name, "failures": len(r.failures), "seconds": round(r.seconds, 3)}
                       for r in report.results],
            "failures": [f.to_dict() for f in report.failures],
        }, separators=(",", ":")))
    else:
        for r in report.results:
            status = "PASS" if not r.failures else f"FAIL ({len(r.failures)})"
            print(f"{r.name:<22} {status:<10} {r.seconds:7.2f}s")
        for f in report.failures:
            where = "" if f.n is None else f" n={f.n} r={f.r}"
            print(f"FAILURE [{f.check}]{where} method={f.method}: {f.detail}", file=sys.stderr)
        print("OK" if report.ok else "VERIFICATION FAILED")
    return EXIT_OK if report.ok else EXIT_VERIFY


def _compute(pair_methods):
    (n, r), methods = pair_methods
    return compute_record(n, r, methods)


def cmd_sweep(args) -> int:
    try:
        spec = parse_sweep_spec(Path(args.spec_file).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read sweep spec: {exc}") from None
    except ParameterError as exc:
        raise UsageError(f"bad sweep spec: {exc}") from None
    fmt = args.format or spec.format
    cache = None
    if not args.no_cache:
        cache = ResultCache(args.cache or spec.cache or default_cache_path())
    try:
        cached = cache.load() if cache else {}
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read cache: {exc}") from None

    records, todo = {}, []
    for pair in spec.pairs():
        rec = cached.get((pair[0], pair[1], __version__))
        if rec is not None and all(m in rec.methods for m in spec.methods):
            records[pair] = rec
        else:
            todo.append(pair)
    if todo:
        jobs = [(pair, spec.methods) for pair in todo]
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                fresh = list(pool.map(_compute, jobs))
        else:
            fresh = [_compute(j) for j in jobs]
        if cache:
            try:
                cache.append(fresh)
            except OSError as exc:
                raise UsageError(f"cannot write cache: {exc}") from None
        for pair, rec in zip(todo, fresh):
            records[pair] = rec
    print(f"sweep: {len(records)} records, {len(records) - len(todo)} from cache, {len(todo)} computed",
          file=sys.stderr)

    ordered = [records[pair] for pair in spec.pairs()]
    if fmt == "json":
        for rec in ordered:
            print(rec.to_json())
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "r", "class", "dimension", "multiplicity", "h_vector", *spec.methods])
        for rec in ordered:
            w.writerow([rec.n, rec.r, rec.kind, rec.dimension, rec.multiplicity,
                        " ".join(map(str, rec.h_vector)),
                        *("" if rec.methods.get(m) is None else rec.methods[m] for m in spec.methods)])
        sys.stdout.write(buf.getvalue())
    else:
        for rec in ordered:
            print(f"n={rec.n:<3} r={rec.r:<3} {rec.kind:<21} dim={rec.dimension:<5} e={rec.multiplicity}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pfhilbert", description="Hilbert series and multiplicities of Pfaffian rings.")
    parser.add_argument("--version", action="version", version=f"pfhilbert {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def ring_args(sp, fmt=True):
        sp.add_argument("--n", type=int, required=True, help="order of the skew-symmetric matrix")
        sp.add_argument("--r", type=int, required=True, help="ideal generated by (2r+2)-Pfaffians")
        if fmt:
            sp.add_argument("--format", choices=("text", "json"), default="text")

    numerator_methods = [m.value for m in NumeratorMethod]
    sp = sub.add_parser("series", help="Hilbert series Q(z)/(1-z)^d")
    ring_args(sp)
    sp.add_argument("--method", choices=numerator_methods, default="det1")
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("hvector", help="h-vector, dimension and multiplicity")
    ring_args(sp)
    sp.add_argument("--method", choices=numerator_methods, default="det1")
    sp.set_defaults(func=cmd_hvector)

    sp = sub.add_parser("hfunction", help="dimension of the degree-ell component")
    ring_args(sp)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--method", choices=[m.value for m in HFunMethod], default="series")
    sp.set_defaults(func=cmd_hfunction)

    sp = sub.add_parser("multiplicity", help="multiplicity by one formula or all of them")
    ring_args(sp)
    sp.add_argument("--method", choices=[*ALL_METHODS, "all"], default="all")
    sp.add_argument("--verbatim", action="store_true",
                    help="evaluate the herzog_trung determinant as printed (no n-2 shift)")
    sp.set_defaults(func=cmd_multiplicity)

    sp = sub.add_parser("verify", help="cross-check every formula and oracle over a grid")
    sp.add_argument("--max-n", type=int, default=12, help=f"determinant/Hilbert-function grid (cap {CAPS['max_n']})")
    sp.add_argument("--oracle-max-n", type=int, default=9, help=f"path enumeration (cap {CAPS['oracle_max_n']})")
    sp.add_argument("--faces-max-n", type=int, default=7, help=f"face counts (cap {CAPS['faces_max_n']})")
    sp.add_argument("--fiber-max-n", type=int, default=6, help=f"light-and-shadow fibers (cap {CAPS['fiber_max_n']})")
    sp.add_argument("--mult-max-n", type=int, default=30, help=f"closed multiplicity formulas (cap {CAPS['mult_max_n']})")
    sp.add_argument("--pfaffian-samples", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--inject-fault", choices=FAULTS, default=None, help=argparse.SUPPRESS)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", help="compute result records over an (n, r) grid")
    sp.add_argument("spec_file")
    sp.add_argument("--cache", help="cache file (overrides $PFHILBERT_CACHE_DIR)")
    sp.add_argument("--no-cache", action="store_true")
    sp.add_argument("--format", choices=("json", "csv", "text"), default=None)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParameterError) as exc:
        print(f"pfhilbert: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
