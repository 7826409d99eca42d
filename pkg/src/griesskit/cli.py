"""``griesskit`` command line.

Exit codes: 0 when everything passes, 1 when a check fails, 2 for usage or IO errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .algebra import GriessError, SchemaViolation, InvariantViolation
from .workbench import FORMATS, SUITES, WorkbenchConfig, fmt

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the command name
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write output here instead of stdout")
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS,
                        help="report format (default from config, else json)")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes for verification")
    common.add_argument("--config", default=argparse.SUPPRESS, help="JSON file with workbench settings")
    p = argparse.ArgumentParser(prog="griesskit", description="Exact Griess algebra workbench", parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", parents=[common], help="dihedral algebras")
    c.add_argument("type", nargs="?", help="1A, 2A, 2B, 3A or 6A")
    c.add_argument("--table", action="store_true", help="metadata of all nine types as CSV")

    f = sub.add_parser("fusion", parents=[common], help="unitary series data and fusion rules")
    f.add_argument("--n", type=int, action="append", help="series index (repeatable, default 1..3)")

    b = sub.add_parser("build", parents=[common], help="export a family algebra as JSON")
    b.add_argument("family", choices=["xn", "abxy"])
    b.add_argument("--n", type=int, help="X^[n] index")
    b.add_argument("--type", dest="xy_type", help="type of <x,y> for abxy")

    g = sub.add_parser("group", parents=[common], help="Miyamoto group of an axis set")
    g.add_argument("--model", required=True, help="algebra JSON file")
    g.add_argument("--seeds", required=True, help="comma separated basis labels")
    g.add_argument("--flavor", choices=["tau", "sigma", "auto"], default="auto")

    lt = sub.add_parser("lattice", parents=[common], help="root lattice models")
    lt.add_argument("--type", dest="root_type", required=True, help="A1..A8, D4.., E6, E7, E8")
    lt.add_argument("--enumerate-ising", action="store_true")
    lt.add_argument("--eta-frame", action="store_true")

    v = sub.add_parser("verify", parents=[common], help="run an acceptance suite")
    v.add_argument("--suite", choices=SUITES, default="all")
    return p


def _config(args) -> WorkbenchConfig:
    try:
        cfg = WorkbenchConfig.from_file(args.config) if args.config else WorkbenchConfig()
        if args.format:
            cfg.format = args.format
        if args.jobs is not None:
            cfg.jobs = args.jobs
        cfg.__post_init__()
    except (OSError, ValueError) as exc:
        raise UsageError(f"config: {exc}") from None
    return cfg


def _emit(text: str, args) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _rows_out(rows, header, cfg) -> str:
    if cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, quoting=csv.QUOTE_ALL, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([fmt(x) for x in r])
        return buf.getvalue()
    if cfg.format == "text":
        return "\n".join(" ".join(fmt(x) for x in r) for r in rows) + "\n"
    return json.dumps([dict(zip(header, [fmt(x) for x in r])) for r in rows], indent=2) + "\n"


# ---------------------------------------------------------------------------
# commands


def cmd_catalog(args, cfg) -> int:
    from .dihedral import DIHEDRAL_TYPES, make, metadata_csv

    if args.table:
        _emit(metadata_csv(), args)
        return EXIT_OK
    if not args.type:
        raise UsageError("catalog needs a type or --table")
    try:
        C = make(args.type)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    t = DIHEDRAL_TYPES[args.type]
    body = {
        "type": t.name,
        "inner_product_2^10": t.inner_product,
        "ising_vectors": C.axes,
        "algebra": C.algebra.to_dict(),
    }
    _emit(json.dumps(body, indent=2) + "\n", args)
    return EXIT_OK


def cmd_fusion(args, cfg) -> int:
    from .virasoro import series_table

    ns = args.n or [1, 2, 3]
    out = {}
    for n in ns:
        try:
            out[str(n)] = _jsonable(series_table(n))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    _emit(json.dumps(out, indent=2, sort_keys=True) + "\n", args)
    return EXIT_OK


def _jsonable(x):
    if isinstance(x, dict):
        return {(k if isinstance(k, str) else str(k)): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    try:
        return fmt(x)
    except Exception:
        return str(x)


def cmd_build(args, cfg) -> int:
    from .workbench import export_algebra

    if args.family == "xn":
        if args.n is None:
            raise UsageError("build xn needs --n")
        name = f"xn:{args.n}"
    else:
        if not args.xy_type:
            raise UsageError("build abxy needs --type")
        name = f"abxy:{args.xy_type}"
    try:
        text = export_algebra(name, config=cfg)
    except ValueError as exc:  # bad index, cap, forbidden or unknown type
        raise UsageError(str(exc)) from None
    _emit(text, args)
    return EXIT_OK


def cmd_group(args, cfg) -> int:
    from .groups import close_axes, group_report
    from .workbench import import_algebra

    try:
        A = import_algebra(Path(args.model))
    except OSError as exc:
        raise UsageError(f"cannot read model: {exc}") from None
    labels = [s.strip() for s in args.seeds.split(",") if s.strip()]
    try:
        seeds = [A[lab] for lab in labels]
    except KeyError as exc:
        raise UsageError(f"unknown basis label {exc}") from None
    S = close_axes(A, seeds, args.flavor, budget=cfg.closure_budget)
    report = group_report(S)
    _emit(json.dumps(report, indent=2) + "\n", args)
    return EXIT_OK


def cmd_lattice(args, cfg) -> int:
    from .lattice import (
        build_lattice_griess,
        e8_ising_enumeration,
        e8_pair_values,
        eta_charge,
        eta_frame,
        eta_frame_check,
        root_system,
        s_t_decomposition,
    )

    try:
        R = root_system(args.root_type)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    LG = build_lattice_griess(R)
    A = LG.algebra
    if args.enumerate_ising:
        vecs = e8_ising_enumeration(LG)
        hist = e8_pair_values(LG, vecs)
        if cfg.format == "json":
            body = {"count": len(vecs), "kinds": {k: sum(v.kind == k for v in vecs) for k in ("A1", "E8")},
                    "pair_values_2^10": {str(k): v for k, v in hist.items()},
                    "vectors": [v.name for v in vecs]}
            _emit(json.dumps(body, indent=2) + "\n", args)
        else:
            _emit(_rows_out([(v.name, v.kind) for v in vecs], ["name", "kind"], cfg), args)
        return EXIT_OK
    if args.eta_frame:
        etas = eta_frame(LG)
        checks = eta_frame_check(LG, etas)
        rows = [(f"eta{k}", 2 * A.inner(e, e), eta_charge(k)) for k, e in enumerate(etas, 1)]
        if cfg.format == "json":
            body = {"type": R.type, "frame": [dict(zip(["name", "central_charge", "expected"], map(fmt, r))) for r in rows],
                    "checks": checks}
            _emit(json.dumps(body, indent=2) + "\n", args)
        else:
            _emit(_rows_out(rows, ["name", "central_charge", "expected"], cfg), args)
        return EXIT_OK if all(checks.values()) else EXIT_FAIL
    st = s_t_decomposition(LG)
    body = {"type": R.type, "dim": A.dim, "positive_roots": len(R.positive), "coxeter_number": R.coxeter_number,
            "c_s": fmt(st.c_s), "c_t": fmt(st.c_t)}
    _emit(json.dumps(body, indent=2) + "\n", args)
    return EXIT_OK


def cmd_verify(args, cfg) -> int:
    from .workbench import run_suite

    report = run_suite(args.suite, cfg)
    _emit(report.render(cfg.format), args)
    return report.exit_code


COMMANDS = {
    "catalog": cmd_catalog,
    "fusion": cmd_fusion,
    "build": cmd_build,
    "group": cmd_group,
    "lattice": cmd_lattice,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors
        return int(exc.code or 0)
    for flag in ("out", "format", "jobs", "config"):
        if not hasattr(args, flag):
            setattr(args, flag, None)
    try:
        cfg = _config(args)
        return COMMANDS[args.command](args, cfg)
    except UsageError as exc:
        print(f"griesskit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SchemaViolation, InvariantViolation) as exc:
        print(f"griesskit: invalid model: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"griesskit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GriessError as exc:
        print(f"griesskit: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
