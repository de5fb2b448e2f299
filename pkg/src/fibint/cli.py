"""Command-line front end: list the catalog, show one entry, run
verifications, emit machine-readable reports.

Exit codes: 0 all verified instances passed, 1 any failure,
2 usage/configuration error.  JSON/CSV payloads are deterministic
(timestamps only in metadata, floats at 17 significant digits).
FIBINT_THREADS caps verifier parallelism.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from datetime import datetime, timezone

from . import registry, verifier

TOL_MIN = 1e-13
TOL_MAX = 1e-3


def _fmt(x: float) -> str:
    return format(x, ".17g")


def _json_escape(s: str) -> str:
    out = []
    for ch in s:
        if ch in '"\\':
            out.append("\\" + ch)
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04x}")
        else:
            out.append(ch)
    return "".join(out)


def _params_str(assignment) -> str:
    return ";".join(f"{k}={v}" for k, v in assignment)


def _report_json(report: verifier.Report, tol, pattern: str) -> str:
    ts = datetime.now(timezone.utc).isoformat()
    buf = ["{"]
    tol_s = "null" if tol is None else _fmt(tol)
    buf.append(f'"meta": {{"tol": {tol_s}, "filter": "{_json_escape(pattern)}", "timestamp": "{ts}"}}, ')
    rows = []
    for r in report.results:
        params = ", ".join(f'"{k}": {v}' for k, v in r.assignment)
        rows.append(
            "{"
            + f'"id": "{r.case_id}", "params": {{{params}}}, '
            + f'"lhs": {_fmt(r.lhs)}, "rhs": {_fmt(r.rhs)}, "abs_err": {_fmt(r.abs_err)}, '
            + f'"tol": {_fmt(r.tol)}, "passed": {"true" if r.passed else "false"}, '
            + f'"note": "{_json_escape(r.note)}"'
            + "}"
        )
    buf.append('"results": [' + ", ".join(rows) + "]")
    buf.append("}")
    return "".join(buf)


def _report_csv(report: verifier.Report) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["id", "params", "lhs", "rhs", "abs_err", "tol", "passed", "note"])
    for r in report.results:
        w.writerow(
            [
                r.case_id,
                _params_str(r.assignment),
                _fmt(r.lhs),
                _fmt(r.rhs),
                _fmt(r.abs_err),
                _fmt(r.tol),
                "true" if r.passed else "false",
                r.note,
            ]
        )
    return buf.getvalue()


def _report_md(report: verifier.Report) -> str:
    lines = [
        "| id | params | lhs | rhs | abs_err | tol | passed |",
        "|----|--------|-----|-----|---------|-----|--------|",
    ]
    for r in report.results:
        mark = "pass" if r.passed else "FAIL"
        lines.append(
            f"| {r.case_id} | {_params_str(r.assignment)} | {r.lhs:.12g} | {r.rhs:.12g} "
            f"| {r.abs_err:.3e} | {r.tol:.1e} | {mark} |"
        )
    lines.append("")
    lines.append(
        f"{report.n_pass} passed, {report.n_fail} failed, "
        f"{len(report.results)} total in {report.wall_time:.2f} s"
    )
    return "\n".join(lines)


def _params_spec_str(case: registry.IdentityCase) -> str:
    parts = []
    for p in case.params:
        s = f"{p.name}={p.min}..{p.max}"
        if p.parity != "any":
            s += f":{p.parity}"
        if p.exclusions:
            s += "!" + ",".join(map(str, p.exclusions))
        parts.append(s)
    return ";".join(parts)


def _list_json(cases) -> str:
    rows = []
    for e in registry.catalog_entries():
        if e["id"] not in cases:
            continue
        params = ", ".join(
            "{"
            + f'"name": "{p["name"]}", "parity": "{p["parity"]}", "min": {p["min"]}, '
            + f'"max": {p["max"]}, "exclusions": {p["exclusions"]}'
            + "}"
            for p in e["params"]
        )
        rows.append(
            "{"
            + f'"id": "{e["id"]}", "anchor": "{_json_escape(e["anchor"])}", '
            + f'"params": [{params}], "strategy": "{e["strategy"]}", '
            + f'"default_tol": {_fmt(e["default_tol"])}'
            + "}"
        )
    return "[" + ", ".join(rows) + "]"


def _list_csv(cases) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["id", "anchor", "params", "strategy", "default_tol"])
    for c in registry.catalog():
        if c.id not in cases:
            continue
        w.writerow([c.id, c.anchor, _params_spec_str(c), c.strategy.label(), _fmt(c.default_tol)])
    return buf.getvalue()


def _list_md(cases) -> str:
    lines = ["| id | anchor | params | strategy | tol |", "|----|--------|--------|----------|-----|"]
    for c in registry.catalog():
        if c.id not in cases:
            continue
        lines.append(
            f"| {c.id} | {c.anchor} | {_params_spec_str(c)} | {c.strategy.label()} | {c.default_tol:.1e} |"
        )
    return "\n".join(lines)


def _parse_grid(specs: list[str]) -> dict[str, tuple[int, int]]:
    out: dict[str, tuple[int, int]] = {}
    for spec in specs:
        try:
            name, _, window = spec.partition("=")
            lo_s, _, hi_s = window.partition("..")
            lo, hi = int(lo_s), int(hi_s)
        except ValueError:
            raise ValueError(f"bad grid override {spec!r}; expected name=lo..hi")
        if name not in registry.PARAM_NAMES:
            raise ValueError(f"bad grid override {spec!r}; parameter must be one of {registry.PARAM_NAMES}")
        if lo > hi:
            raise ValueError(f"bad grid override {spec!r}; empty window")
        out[name] = (lo, hi)
    return out


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fibint", description="Verify Fibonacci-Lucas integral identities.")
    sub = ap.add_subparsers(dest="command", required=True)

    p_list = sub.add_parser("list", help="list catalog entries")
    p_list.add_argument("--filter", default="*", help="glob over catalog ids")
    p_list.add_argument("--format", choices=("json", "csv", "md"), default="md")
    p_list.add_argument("--out", default=None, help="write to file instead of stdout")

    p_show = sub.add_parser("show", help="show one catalog entry")
    p_show.add_argument("id")

    p_verify = sub.add_parser("verify", help="run verifications")
    p_verify.add_argument("--filter", default="*", help="glob over catalog ids")
    p_verify.add_argument("--tol", type=float, default=None, help="absolute tolerance override")
    p_verify.add_argument("--format", choices=("json", "csv", "md"), default="md")
    p_verify.add_argument("--out", default=None, help="write report to file instead of stdout")
    p_verify.add_argument(
        "--grid",
        action="append",
        default=[],
        metavar="name=lo..hi",
        help="override a parameter window across all matching entries (repeatable)",
    )
    return ap


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0

    try:
        if args.command == "list":
            ids = set(verifier.match_ids(args.filter))
            text = {"json": _list_json, "csv": _list_csv, "md": _list_md}[args.format](ids)
            _emit(text, args.out)
            return 0

        if args.command == "show":
            case = registry.get_case(args.id)
            grid = registry.default_grid(case.id)
            lines = [
                f"id:          {case.id}",
                f"anchor:      {case.anchor}",
                f"strategy:    {case.strategy.label()}",
                f"params:      {_params_spec_str(case) or '(none)'}",
                f"default_tol: {case.default_tol:.2e}",
                f"instances:   {len(grid)}",
            ]
            if case.note:
                lines.append(f"note:        {case.note}")
            print("\n".join(lines))
            return 0

        # verify
        if args.tol is not None and not (TOL_MIN <= args.tol <= TOL_MAX):
            print(f"error: --tol must lie in [{TOL_MIN}, {TOL_MAX}]", file=sys.stderr)
            return 2
        overrides = _parse_grid(args.grid) or None
        report = verifier.run(args.filter, grid_override=overrides, tol_override=args.tol)
        if args.format == "json":
            text = _report_json(report, args.tol, args.filter)
        elif args.format == "csv":
            text = _report_csv(report)
        else:
            text = _report_md(report)
        _emit(text, args.out)
        return 0 if report.n_fail == 0 else 1
    except (registry.CatalogError, registry.ParamError, verifier.EmptyFilterError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
