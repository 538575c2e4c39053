"""Command line entry point: ``kospheres <command> [args] [--format ...]``.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 pair not certified or classification unknown.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import plotting
from .bilinear import BilinearMap, normed_violations, sample_normed, verify_nice, verify_normed
from .classify import classify, classify_range, consistency_audit
from .hurwitz import binom_odd
from .ideals import HomogeneousIdeal, ideal_I, ideal_part
from .ko_ring import KOElement, KRElement, KSpElement, KUElement, ko_group, parse_element
from .nice import (
    DEFAULT_MAX_EXPANSIONS,
    InvalidDerivation,
    NiceDerivation,
    certify_nice,
    emit_regular_map,
    realize,
)
from .render import FORMATS, cell, json_value, render_records, render_table
from .spheres import (
    ORDER_REFERENCE,
    PHI_REFERENCE,
    bott_order_table,
    kgroups_product,
    phi,
    phi_table,
    table_mismatches,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _warn(text: str) -> None:
    sys.stderr.write(text.rstrip("\n") + "\n")


def _dump(data) -> str:
    return json.dumps(data, ensure_ascii=False, indent=2)


def _fmt(args, default: str = "text") -> str:
    return args.format or default


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc})") from exc


# ------------------------------------------------------------ commands


def cmd_coeff(args) -> int:
    try:
        x = parse_element(args.expr)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    ring = {KOElement: "KO", KUElement: "KU", KSpElement: "KSp", KRElement: "KR"}[type(x)]
    record = {"expr": args.expr, "ring": ring, "canonical": str(x)}
    if isinstance(x, KOElement) and x.is_homogeneous() and not x.is_zero():
        g = ko_group(x.degree)
        record["degree"] = x.degree
        record["group"] = {"kind": g.kind.value, "generator": g.generator}
    fmt = _fmt(args)
    if fmt == "json":
        _emit(_dump(record))
    elif fmt == "text":
        _emit(record["canonical"])
    else:
        flat = dict(record)
        if "group" in flat:
            flat["group"] = f"{flat['group']['kind']} <{flat['group']['generator']}>"
        _emit(render_records([flat], fmt, list(flat)))
    return EXIT_OK


def _parse_ideal(spec: str) -> HomogeneousIdeal:
    m = re.fullmatch(r"\s*I\^?(\d+)\s*", spec)
    if m:
        return ideal_I(int(m.group(1)))
    try:
        return HomogeneousIdeal.parse(spec)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad ideal {spec!r}: {exc}") from exc


def cmd_ideal(args) -> int:
    J = _parse_ideal(args.spec)
    part = ideal_part(J, args.degree)
    record = {
        "ideal": str(J),
        "degree": args.degree,
        "ambient": part.ambient.value,
        "subgroup": part.label,
        "index": json_value(part.index),
    }
    fmt = _fmt(args)
    if fmt == "json":
        _emit(_dump(record))
    elif fmt == "text":
        _emit(f"{part.label} (index {cell(part.index, fmt)} in KO^{args.degree} = {part.ambient.value})")
    else:
        record["index"] = cell(part.index, fmt)
        _emit(render_records([record], fmt, list(record)))
    return EXIT_OK


def cmd_phi(args) -> int:
    v = phi(args.n, args.m)
    fmt = _fmt(args)
    if fmt == "json":
        _emit(_dump({"n": args.n, "m": args.m, "phi": json_value(v)}))
    else:
        _emit(cell(v, fmt))
    return EXIT_OK


def _table_command(args, computed, reference, title) -> int:
    _emit(render_table(computed, _fmt(args)))
    if args.figure:
        plotting.plot_residue_table(computed, args.figure, title)
        _warn(f"figure written to {args.figure}")
    if args.check:
        bad = table_mismatches(computed, reference)
        for n, m, got, want in bad:
            _warn(f"mismatch at ({n},{m}): computed {cell(got, 'text')}, reference {cell(want, 'text')}")
        if bad:
            return EXIT_FAIL
        _warn("check: all 64 entries agree with the reference table")
    return EXIT_OK


def cmd_phi_table(args) -> int:
    return _table_command(args, phi_table(), PHI_REFERENCE, "phi(n, m)")


def cmd_order_table(args) -> int:
    return _table_command(args, bott_order_table(), ORDER_REFERENCE, "order of KO^0 of S^(n+m)")


def cmd_kgroups(args) -> int:
    try:
        report = kgroups_product(args.n, args.m, args.field)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    fmt = _fmt(args)
    if fmt == "json":
        _emit(_dump(report.to_json()))
        return EXIT_OK
    summands = [
        (args.n + args.m, report.wedge_ambient, report.wedge_index, report.wedge_subgroup),
        (args.n, report.factor_summands[0], 1, "Full"),
        (args.m, report.factor_summands[1], 1, "Full"),
    ]
    rows = [
        {"summand": f"S^{dim}", "ambient": f"{g.kind.value} <{g.generator}>",
         "index": cell(index, fmt), "subgroup": label}
        for dim, g, index, label in summands
    ]
    _emit(render_records(rows, fmt, ["summand", "ambient", "index", "subgroup"]))
    return EXIT_OK


def cmd_classify(args) -> int:
    st = classify(args.n, args.m, args.budget)
    fmt = _fmt(args)
    if fmt == "json":
        _emit(_dump(st.to_json()))
    elif fmt == "text":
        _emit(str(st))
    else:
        _emit(render_records([_status_row(st)], fmt, _STATUS_COLUMNS))
    return EXIT_UNKNOWN if st.verdict.is_unknown else EXIT_OK


_STATUS_COLUMNS = ["n", "m", "verdict", "evidence", "binom_odd"]


def _status_row(st) -> dict:
    return {"n": st.n, "m": st.m, "verdict": st.verdict.value, "evidence": st.evidence,
            "binom_odd": st.binom_odd}


def cmd_classify_range(args) -> int:
    if args.N < 1:
        raise UsageError("N must be positive")
    statuses = classify_range(args.N, args.budget)
    fmt = _fmt(args)
    if fmt == "json":
        _emit(_dump([st.to_json() for st in statuses]))
    else:
        _emit(render_records([_status_row(st) for st in statuses], fmt, _STATUS_COLUMNS))
    if args.figure:
        plotting.plot_verdict_grid(statuses, args.N, args.figure, f"1 <= n, m <= {args.N}")
        _warn(f"figure written to {args.figure}")
    unknown = sum(st.verdict.is_unknown for st in statuses)
    if unknown:
        _warn(f"{unknown} of {len(statuses)} pairs are unknown")
    return EXIT_OK


def cmd_certify(args) -> int:
    if args.n < 0 or args.m < 0:
        raise UsageError("n and m must be nonnegative")
    d = certify_nice(args.n, args.m, args.budget)
    if d is None:
        reason = "binomial coefficient is even" if not binom_odd(args.n, args.m) else "search exhausted"
        _warn(f"({args.n},{args.m}) not certified: {reason}")
        return EXIT_UNKNOWN
    fmt = _fmt(args, "json")
    if fmt == "json":
        _emit(json.dumps(d.to_json()))
    else:
        _emit(str(d))
    return EXIT_OK


def cmd_realize(args) -> int:
    data = _read_json(args.file)
    try:
        d = NiceDerivation.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"not a derivation: {exc}") from exc
    try:
        f = realize(d)
    except InvalidDerivation as exc:
        _warn(f"invalid derivation: {exc}")
        return EXIT_FAIL
    n, m = d.target
    if n == 0 or m == 0:
        _emit(json.dumps(f.to_json()))
        return EXIT_OK
    spec = emit_regular_map(f, d, samples=args.samples, seed=args.seed)
    _emit(json.dumps(spec.to_json()))
    return EXIT_OK


def cmd_verify_map(args) -> int:
    data = _read_json(args.file)
    try:
        f = BilinearMap.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"not a bilinear map: {exc}") from exc
    report = {"shape": list(f.shape), "normed": verify_normed(f), "nice": verify_nice(f)}
    failures = []
    if not report["normed"]:
        for v in normed_violations(f, limit=3):
            failures.append(f"coefficient identity fails at (j,l,j',l')=({v.j},{v.l},{v.j2},{v.l2}): {v}")
    misses = list(sample_normed(f, args.samples, args.seed))
    report["samples"] = {"count": args.samples, "seed": args.seed, "failures": len(misses)}
    if misses:
        failures.append(f"{len(misses)} of {args.samples} rational samples violate |F|^2 = |x|^2|y|^2")
    if "n" in data or "m" in data:
        n, m = data.get("n"), data.get("m")
        if (n, m) != (f.a - 1, f.b - 1) or f.c != f.a + f.b - 1:
            failures.append(f"declared (n, m) = ({n}, {m}) does not match shape {f.shape}")
        elif not binom_odd(n, m):
            failures.append(f"binom({n + m}, {n}) is even")
        if not report["nice"]:
            failures.append("not nice: first coordinate is not x1*y1")
    report["ok"] = not failures
    report["failures"] = failures
    fmt = _fmt(args)
    if fmt == "json":
        _emit(_dump(report))
    else:
        status = "OK" if report["ok"] else "FAILED"
        _emit(f"{status}: shape {tuple(f.shape)}, normed={report['normed']}, nice={report['nice']}")
    for msg in failures:
        _warn(msg)
    return EXIT_OK if report["ok"] else EXIT_FAIL


def cmd_audit(args) -> int:
    if args.N < 1:
        raise UsageError("N must be positive")
    report = consistency_audit(args.N, args.budget)
    fmt = _fmt(args)
    if fmt == "json":
        _emit(_dump(report.to_json()))
    else:
        rows = [{"verdict": k, "pairs": v} for k, v in sorted(report.counts.items())]
        _emit(render_records(rows, fmt, ["verdict", "pairs"]))
    for v in report.violations:
        _warn(v)
    _warn(f"audit N={args.N}: {report.pairs} pairs, {len(report.violations)} violations")
    return EXIT_OK if report.ok else EXIT_FAIL


# ------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None, help="output format")
    common.add_argument("--budget", type=int, default=DEFAULT_MAX_EXPANSIONS,
                        help="search budget (state expansions) for certification")
    common.add_argument("--seed", type=int, default=0, help="seed for rational sampling")
    common.add_argument("--samples", type=int, default=100, help="number of rational samples")
    common.add_argument("--check", action="store_true",
                        help="compare computed tables with the embedded reference tables")
    common.add_argument("--figure", metavar="PATH", help="also render a figure to PATH")

    parser = argparse.ArgumentParser(
        prog="kospheres",
        description="KO coefficient arithmetic, sphere K-groups and degrees of regular maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    add("coeff", cmd_coeff, "canonical form of a coefficient expression").add_argument("expr")
    p = add("ideal", cmd_ideal, "degree part of a homogeneous ideal, e.g. '(2,e2,a)' or I^3")
    p.add_argument("spec")
    p.add_argument("degree", type=int)
    p = add("phi", cmd_phi, "index of complexifiable classes on S^n x S^m")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    add("phi-table", cmd_phi_table, "phi(n, m) for n, m mod 8")
    add("order-table", cmd_order_table, "order of KO^0 of S^(n+m) for n, m mod 8")
    p = add("kgroups", cmd_kgroups, "image of algebraic K_0 of S^n x S^m")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("field", help="R, C or H")
    p = add("classify", cmd_classify, "degrees of regular maps S^n x S^m -> S^(n+m)")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    add("classify-range", cmd_classify_range, "classify all 1 <= n, m <= N").add_argument(
        "N", type=int
    )
    p = add("certify", cmd_certify, "derivation showing (n, m) is a nice pair")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    add("realize", cmd_realize, "build the map for a derivation file ('-' for stdin)").add_argument(
        "file"
    )
    add("verify-map", cmd_verify_map, "check a bilinear map file exactly").add_argument("file")
    add("audit", cmd_audit, "consistency audit over 1 <= n, m <= N").add_argument("N", type=int)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on bad usage
    try:
        return args.func(args)
    except UsageError as exc:
        _warn(f"kospheres {args.command}: {exc}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
