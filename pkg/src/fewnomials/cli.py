"""Command-line front end.

The JSON report goes to standard output and a one-line human summary to
standard error.  Exit codes: 0 complete, 2 incomplete certification,
3 fixture failure, 64 usage error, 65 parse error.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

from . import bench
from .bounds import BoundReport, FormulaId, all_reports, component_bounds, kprime_bound
from .config import ConfigError, IsolationConfig, PrecisionPolicy
from .core import DimensionError, Fewnomial, evaluate
from .polytope import classify_pair, is_pyramidal, mixed_volume_zero, pair_polygon
from .solver import NotPyramidalError, PipelineReport, certificate_to_dict, solve
from .sysfile import ParseError, SystemFile, parse_system
from .transform import CanonicalizationError
from .univariate import RealExpPoly, descartes_bound, isolate_positive_roots, isolate_roots, rolle_root_bound

EXIT_OK, EXIT_INCOMPLETE, EXIT_FIXTURE, EXIT_USAGE, EXIT_PARSE = 0, 2, 3, 64, 65


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _Usage(Exception):
    pass


def _config(args) -> IsolationConfig:
    return IsolationConfig(
        min_width=args.min_width,
        max_subdivisions=args.max_subdiv,
        precision_policy=PrecisionPolicy(args.precision),
        tau_rank=args.tau_rank,
        threads=args.threads,
    )


def _read(path: str, n: int | None = None) -> SystemFile:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_system(text, n=n)


def _emit(args, doc: dict, summary: str):
    if args.json:
        json.dump(doc, sys.stdout, indent=2, default=str)
        sys.stdout.write("\n")
    print(summary, file=sys.stderr)


def _fmt_range(r) -> str:
    return f"[{r[0]},{r[1]}]"


# -- commands ------------------------------------------------------------------


def cmd_classify(args) -> int:
    sf = _read(args.file)
    F = sf.system
    cfg = _config(args)
    doc = {"label": sf.label, "type": list(F.type), "n": F.n}
    doc["pyramidal"] = F.k == F.n and is_pyramidal(F, cfg.tau_rank)
    doc["mixed_volume_zero"] = F.k == F.n and mixed_volume_zero(F, cfg.tau_rank)
    parts = [f"pyramidal={doc['pyramidal']}", f"mixed-volume-zero={doc['mixed_volume_zero']}"]
    if F.n == 2 and F.k == 2:
        P = pair_polygon(F)
        doc["class"] = classify_pair(F).name
        doc["minkowski_vertices"] = [list(v) for v in P.vertices]
        parts.insert(0, f"class {doc['class']}")
    _emit(args, doc, "; ".join(parts))
    return EXIT_OK


def _univariate_report(sf: SystemFile, cfg, unit: bool):
    """Single-polynomial input: on (0,1) with ``x1 = t, x2 = 1 - t``, or on (0, inf)."""
    F = sf.system
    if unit:
        form = bench.unit_form(F)
        res = isolate_roots(form, cfg)
        bound = BoundReport(None, FormulaId.UGDRS)
        if form.k >= 1:
            bound = BoundReport(rolle_root_bound(form), FormulaId.UGDRS, {"k": form.k}, note="Rolle")
        return res, bound, "t"
    if F.n != 1 or F.k != 1:
        raise _Usage("a univariate input is one polynomial in x1 (or use --unit-interval)")
    p = RealExpPoly(tuple((t.coeff, t.exponent[0]) for t in F[0].terms))
    res = isolate_positive_roots(p, cfg)
    return res, BoundReport(descartes_bound(p), FormulaId.UGDRS, {"alternations": descartes_bound(p)}), "x"


def _is_univariate(sf: SystemFile, args) -> bool:
    return args.unit_interval or sf.metadata.get("form") == "unit-interval" or (sf.system.n == 1 and sf.system.k == 1)


def _unit(sf, args) -> bool:
    return args.unit_interval or sf.metadata.get("form") == "unit-interval"


def cmd_count(args) -> int:
    sf = _read(args.file, n=2 if args.unit_interval else None)
    cfg = _config(args)
    if _is_univariate(sf, args):
        res, bound, coord = _univariate_report(sf, cfg, _unit(sf, args))
        doc = {"label": sf.label, "count_range": list(res.count_range), "status": res.status,
               "bound": bound.to_dict(), "roots": list(res.roots), "coordinate": coord}
        summary = f"certified roots: {_fmt_range(res.count_range)}; bound {bound.value} ({bound.formula_id.value})"
        _emit(args, doc, summary)
        return EXIT_OK if res.complete else EXIT_INCOMPLETE
    rep = solve(sf.system, cfg)
    if isinstance(rep, PipelineReport):
        doc = {"label": sf.label, **rep.to_dict()}
        summary = (f"certified roots: {_fmt_range(rep.count_range)}; "
                   f"bound {rep.applied_bound} ({rep.provenance.value})")
        complete = rep.complete
    else:
        doc = {"label": sf.label, "count_range": list(rep.count_range), "status": rep.status,
               "bound": rep.bound, "provenance": FormulaId.THM_TRI1.value,
               "roots": [certificate_to_dict(c) for c in rep.certificates], "trace": list(rep.trace)}
        summary = f"certified roots: {_fmt_range(rep.count_range)}; bound {rep.bound} (THM_TRI1)"
        complete = rep.status == "COMPLETE"
    if sf.expected_count is not None:
        doc["expected_count"] = sf.expected_count
    _emit(args, doc, summary)
    return EXIT_OK if complete else EXIT_INCOMPLETE


def cmd_isolate(args) -> int:
    sf = _read(args.file, n=2 if args.unit_interval else None)
    cfg = _config(args)
    digits = args.digits
    if _is_univariate(sf, args):
        res, bound, coord = _univariate_report(sf, cfg, _unit(sf, args))
        certs = []
        for c in res.certificates:
            s = c.box[0]
            certs.append({"interval": [f"{s.lo:.{digits}g}", f"{s.hi:.{digits}g}"], "width": s.width,
                          "status": c.status.name, "mid": c.witness["mid"]})
        doc = {"label": sf.label, "coordinate": coord, "status": res.status,
               "count_range": list(res.count_range), "certificates": certs}
        lines = [f"{coord} in [{c['interval'][0]}, {c['interval'][1]}] {c['status']}" for c in certs]
        _emit(args, doc, "\n".join(lines + [f"status {res.status}"]))
        return EXIT_OK if res.complete else EXIT_INCOMPLETE
    rep = solve(sf.system, cfg)
    certs = rep.roots if isinstance(rep, PipelineReport) else rep.certificates
    out = []
    for c in certs:
        out.append({"box": [[f"{s.lo:.{digits}g}", f"{s.hi:.{digits}g}"] for s in c.box],
                    "status": c.status.name, "trace": list(c.trace)})
    doc = {"label": sf.label, "status": rep.status, "count_range": list(rep.count_range), "certificates": out}
    lines = [" x ".join(f"[{a}, {b}]" for a, b in c["box"]) + f" {c['status']}" for c in out]
    _emit(args, doc, "\n".join(lines + [f"status {rep.status}"]))
    return EXIT_OK if rep.status == "COMPLETE" else EXIT_INCOMPLETE


def cmd_bounds(args) -> int:
    f = args.formula
    if f == "all":
        doc = {k: [r.to_dict() for r in v] for k, v in all_reports().items()}
        _emit(args, doc, f"{sum(len(v) for v in doc.values())} bounds")
        return EXIT_OK
    a = {k: v for k, v in vars(args).items() if k in ("n", "mu", "m", "I", "V", "kind") and v is not None}
    if args.cls is not None:
        a["class"] = args.cls
    if args.ms is not None:
        a["ms"] = args.ms
    try:
        value = bench.bound_value(f, a)
    except KeyError as e:
        raise _Usage(f"formula {f!r} needs --{e.args[0]}") from None
    doc = {"formula": f, "inputs": a, "value": value}
    if f == "kprime":
        doc["report"] = kprime_bound(a["n"], a["mu"]).to_dict()
    elif f.startswith("components"):
        comp, non = component_bounds(a["n"], a["m"])
        doc["report"] = {"compact": comp.to_dict(), "noncompact": non.to_dict()}
    _emit(args, doc, str(value))
    return EXIT_OK


def cmd_paper_bench(args) -> int:
    fixtures = bench.load_fixtures(args.fixtures)
    outcomes = bench.run_all(fixtures, _config(args))
    for o in outcomes:
        line = f"{o.verdict:5s} {o.id}"
        if o.note:
            line += f"  ({o.note})"
        print(line, file=sys.stderr)
        if o.verdict in ("FAIL", "XFAIL", "ERROR", "XPASS"):
            for ok, msg in o.checks:
                if not ok:
                    print(f"      {msg}", file=sys.stderr)
    doc = {"fixtures": [{"id": o.id, "verdict": o.verdict, "note": o.note,
                         "checks": [{"ok": ok, "detail": m} for ok, m in o.checks]} for o in outcomes]}
    failed = sum(o.failed for o in outcomes)
    if args.json:
        json.dump(doc, sys.stdout, indent=2)
        sys.stdout.write("\n")
    print(f"{len(outcomes) - failed}/{len(outcomes)} fixtures ok", file=sys.stderr)
    return EXIT_FIXTURE if failed else EXIT_OK


def sample_curve(f: Fewnomial, box, grid: int = 512, refine: int = 30) -> list[tuple[float, float]]:
    """Points of ``{f = 0}`` in ``box`` found on the edges of a ``grid x grid`` lattice.

    Every lattice edge whose endpoint values differ in sign is refined by
    bisection, so the points lie on the curve to about ``2^-refine`` of
    the cell size.
    """
    if f.n != 2:
        raise DimensionError("plotting needs a polynomial in two variables")
    (x0, x1), (y0, y1) = box
    if not (0 < x0 < x1 and 0 < y0 < y1):
        raise ValueError("box must lie in the open positive quadrant with lo < hi")
    xs = np.linspace(x0, x1, grid)
    ys = np.linspace(y0, y1, grid)
    V = np.array([[evaluate(f, (x, y)) for y in ys] for x in xs])
    S = np.sign(V)
    pts = []

    def bisect(p, q, fp):
        for _ in range(refine):
            m = ((p[0] + q[0]) / 2, (p[1] + q[1]) / 2)
            fm = evaluate(f, m)
            if fm == 0:
                return m
            if (fm > 0) == (fp > 0):
                p, fp = m, fm
            else:
                q = m
        return ((p[0] + q[0]) / 2, (p[1] + q[1]) / 2)

    for i in range(grid):
        for j in range(grid):
            if S[i, j] == 0:
                pts.append((xs[i], ys[j]))
                continue
            if i + 1 < grid and S[i, j] * S[i + 1, j] < 0:
                pts.append(bisect((xs[i], ys[j]), (xs[i + 1], ys[j]), V[i, j]))
            if j + 1 < grid and S[i, j] * S[i, j + 1] < 0:
                pts.append(bisect((xs[i], ys[j]), (xs[i], ys[j + 1]), V[i, j]))
    return pts


def cmd_plot(args) -> int:
    sf = _read(args.file)
    F = sf.system
    if not 1 <= args.index <= F.k:
        raise _Usage(f"--index must be between 1 and {F.k}")
    if args.box is None:
        raise _Usage("plot needs --box X0 X1 Y0 Y1")
    box = ((args.box[0], args.box[1]), (args.box[2], args.box[3]))
    try:
        pts = sample_curve(F[args.index - 1], box, args.grid)
    except ValueError as e:
        raise _Usage(str(e)) from None
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        w = csv.writer(out)
        w.writerow(["x1", "x2"])
        for p in pts:
            w.writerow([repr(float(p[0])), repr(float(p[1]))])
    finally:
        if args.out:
            out.close()
    if args.out and args.json:
        json.dump({"points": len(pts), "file": args.out, "grid": args.grid}, sys.stdout)
        sys.stdout.write("\n")
    print(f"{len(pts)} curve points", file=sys.stderr)
    return EXIT_OK


# -- argument parsing ----------------------------------------------------------


def _common(p):
    p.add_argument("--min-width", type=float, default=1e-12)
    p.add_argument("--max-subdiv", type=int, default=10**6)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--precision", choices=["auto", "double", "extended"], default="auto",
                   help="auto is double precision with per-interval escalation")
    p.add_argument("--tau-rank", type=float, default=1e-9)
    p.add_argument("--json", action=argparse.BooleanOptionalAction, default=True)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="fewnomials", description="Certified positive roots of fewnomial systems.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="Minkowski-sum class, pyramidal and mixed-volume-zero flags")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    for name, func, hlp in (("count", cmd_count, "certified root-count range and bound"),
                            ("isolate", cmd_isolate, "certified root boxes")):
        p = sub.add_parser(name, help=hlp)
        p.add_argument("file")
        p.add_argument("--unit-interval", action="store_true",
                       help="read one polynomial as sum c t^a (1-t)^b with x1 = t and x2 = 1 - t")
        if name == "isolate":
            p.add_argument("--digits", type=int, default=17)
        p.set_defaults(func=func)

    p = sub.add_parser("bounds", help="closed-form bounds")
    p.add_argument("formula", choices=sorted(bench._BOUNDS) + ["all"])
    p.add_argument("--n", type=int)
    p.add_argument("--mu", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--I", type=int)
    p.add_argument("--V", type=int)
    p.add_argument("--ms", type=int, nargs="+")
    p.add_argument("--class", dest="cls")
    p.add_argument("--kind", choices=["INFLECTION", "VERTICAL_TANGENCY", "SINGULAR"])
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("paper-bench", help="replay every stored reference fixture")
    p.add_argument("--fixtures", help="alternative fixture file")
    p.set_defaults(func=cmd_paper_bench)

    p = sub.add_parser("plot", help="CSV samples of a curve {f = 0}")
    p.add_argument("file")
    p.add_argument("--box", type=float, nargs=4, metavar=("X0", "X1", "Y0", "Y1"))
    p.add_argument("--grid", type=int, default=512)
    p.add_argument("--index", type=int, default=1, help="which polynomial of the file (1-based)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_plot)

    for p in sub.choices.values():
        _common(p)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, DimensionError) as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as e:
        print(f"cannot read input: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (_Usage, ConfigError, NotPyramidalError, CanonicalizationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
