"""Command-line surface: single computations, sweeps, the comparison table
and the verify suites.

Every numeric result is emitted as an exact fraction plus a 12-significant-
digit decimal, with an exactness flag (exact | bound | estimate) and a
provenance note (oracle | closed_form | formula | search).  Output is
deterministic for fixed flags and seed.

Exit codes: 0 success, 1 usage error, 2 capacity exceeded, 3 internal
invariant violation (including verify failures).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from . import verify as verify_mod
from .bounds import (
    elias_bound,
    elias_bound_preset,
    gv_radius,
    hamming_bound,
    max_code_size_exact,
    plotkin_like_bound,
)
from .compare import compare_table
from .container import (
    ALGORITHM_COUNT,
    ALGORITHM_DEGREE,
    build_container_family,
    build_lee_graph,
    count_independent_sets,
    run_algorithm1,
    run_algorithm2,
    supersaturation_report,
)
from .core import Space, Word
from .density import (
    linear_density_bounds,
    linear_density_exact,
    nonlinear_code_bounds,
    nonlinear_density_bounds,
    nonlinear_density_exact,
    trend_scan,
)
from .errors import CapacityError, DomainError, InvariantViolation
from .intersections import intersection_size
from .volumes import (
    ball_volume,
    ball_volume_closed_form,
    estimate_constant_cm,
    lemma_branch,
    volume_bounds,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAPACITY = 2
EXIT_INVARIANT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(EXIT_USAGE)


def _decimal(value) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        value = Fraction(value)
    if isinstance(value, Fraction):
        with localcontext() as ctx:
            ctx.prec = 12
            return str(Decimal(value.numerator) / Decimal(value.denominator))
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _fraction(value) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


@dataclass(frozen=True)
class ResultValue:
    name: str
    value: object
    exactness: str  # exact | bound | estimate
    provenance: str  # oracle | closed_form | formula | search | replay

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "fraction": _fraction(self.value),
            "decimal": _decimal(self.value),
            "exactness": self.exactness,
            "provenance": self.provenance,
        }


@dataclass
class OutputRecord:
    command: str
    parameters: dict
    results: list[ResultValue]
    notes: list[str]
    rows: list[dict] | None = None  # sweep commands: one dict per tuple
    row_columns: list[str] | None = None

    def as_dict(self) -> dict:
        payload = {
            "command": self.command,
            "parameters": {k: _fraction(v) for k, v in self.parameters.items()},
            "results": [r.as_dict() for r in self.results],
            "notes": self.notes,
        }
        if self.rows is not None:
            payload["rows"] = self.rows
        return payload

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.as_dict(), sort_keys=True, indent=2)
        if fmt == "csv":
            return self._render_csv()
        return self._render_table()

    def _render_csv(self) -> str:
        buf = io.StringIO()
        if self.rows is not None:
            columns = self.row_columns or sorted(self.rows[0]) if self.rows else []
            writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\r\n")
            writer.writeheader()
            for row in self.rows:
                writer.writerow({k: row.get(k, "") for k in columns})
        else:
            writer = csv.writer(buf, lineterminator="\r\n")
            writer.writerow(["name", "fraction", "decimal", "exactness", "provenance"])
            for r in self.results:
                d = r.as_dict()
                writer.writerow(
                    [d["name"], d["fraction"], d["decimal"], d["exactness"], d["provenance"]]
                )
        return buf.getvalue().rstrip("\r\n")

    def _render_table(self) -> str:
        lines = [f"# {self.command}"]
        if self.parameters:
            lines.append(
                "  " + "  ".join(f"{k}={_fraction(v)}" for k, v in self.parameters.items())
            )
        for r in self.results:
            d = r.as_dict()
            approx = f" (~ {d['decimal']})" if d["decimal"] != d["fraction"] else ""
            lines.append(f"  {d['name']} = {d['fraction']}{approx} [{r.exactness}, {r.provenance}]")
        if self.rows is not None:
            columns = self.row_columns or (sorted(self.rows[0]) if self.rows else [])
            lines.append("  " + " | ".join(columns))
            for row in self.rows:
                lines.append("  " + " | ".join(str(row.get(k, "")) for k in columns))
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _parse_words(space: Space, arg: str) -> list[Word]:
    arg = arg.strip()
    if not arg:
        return []
    return [Word.from_string(space, token.strip()) for token in arg.split(",")]


def _add_common(parser) -> None:
    parser.add_argument("--format", choices=("table", "json", "csv"), default="table")
    parser.add_argument("--out", metavar="FILE", default=None)


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_volume(args) -> int:
    space = Space(args.m, args.n)
    params = {"m": args.m, "n": args.n, "r": args.r, "method": args.method}
    results = []
    notes = []
    oracle = ball_volume(space, args.r)
    if args.method == "oracle":
        results.append(ResultValue("volume", oracle, "exact", "oracle"))
    elif args.method == "closed":
        formula = ball_volume_closed_form(space, args.r)
        results.append(ResultValue("volume_oracle", oracle, "exact", "oracle"))
        results.append(ResultValue("volume_closed_form", formula, "exact", "closed_form"))
        results.append(
            ResultValue("discrepancy", formula != oracle, "exact", "closed_form")
        )
        if formula != oracle:
            notes.append(
                "closed form disagrees with the oracle at these parameters; "
                "the oracle value is authoritative"
            )
    else:
        lower, upper = volume_bounds(space, args.r)
        results.append(ResultValue("volume_oracle", oracle, "exact", "oracle"))
        results.append(ResultValue("lower", lower, "bound", "formula"))
        results.append(ResultValue("upper", upper, "bound", "formula"))
    record = OutputRecord("volume", params, results, notes)
    _emit(record.render(args.format), args.out)
    return EXIT_OK


def _cmd_bounds(args) -> int:
    results = []
    notes = []
    if args.bound == "hamming":
        space = Space(args.m, args.n)
        params = {"m": args.m, "n": args.n, "t": args.t}
        results.append(
            ResultValue("hamming_bound", hamming_bound(space, args.t), "bound", "formula")
        )
    elif args.bound == "plotkin":
        params = {"p": args.p, "s": args.s, "n": args.n, "t": args.t}
        log_bound = plotkin_like_bound(args.p, args.s, args.n, args.t)
        results.append(ResultValue("base", log_bound.base, "exact", "formula"))
        results.append(ResultValue("exponent", log_bound.exponent, "bound", "formula"))
        notes.append("bound value is base**exponent; compare in log space")
    elif args.bound == "elias":
        space = Space(args.m, args.n)
        params = {"m": args.m, "n": args.n, "d": args.d, "r": args.r}
        report = elias_bound(space, args.d, args.r)
        results.append(
            ResultValue("hypotheses_ok", report.hypotheses_ok, "exact", "formula")
        )
        if report.value is not None:
            results.append(ResultValue("elias_bound", report.value, "bound", "formula"))
    elif args.bound == "elias-preset":
        space = Space(args.m, args.n)
        params = {"m": args.m, "n": args.n, "t": args.t}
        report = elias_bound_preset(space, args.t)
        results.append(
            ResultValue("hypotheses_ok", report.hypotheses_ok, "exact", "formula")
        )
        if report.value is not None:
            results.append(ResultValue("elias_bound", report.value, "bound", "formula"))
        notes.append("auxiliary radius preset r = t + 7, distance d = 2t + 1")
    elif args.bound == "gv":
        space = Space(args.m, args.n)
        rate = Fraction(args.rate)
        params = {"m": args.m, "n": args.n, "R": rate}
        cert = gv_radius(space, rate)
        results.append(ResultValue("t", cert.t, "exact", "search"))
        results.append(ResultValue("certifying_volume", cert.volume, "exact", "oracle"))
        results.append(
            ResultValue("required_exponent", cert.required_exponent, "exact", "formula")
        )
    else:  # exact
        space = Space(args.m, args.n)
        params = {"m": args.m, "n": args.n, "d": args.d}
        results.append(
            ResultValue("max_code_size", max_code_size_exact(space, args.d), "exact", "search")
        )
    record = OutputRecord(f"bounds {args.bound}", params, results, notes)
    _emit(record.render(args.format), args.out)
    return EXIT_OK


def _cmd_density(args) -> int:
    results = []
    notes = []
    if args.kind == "nonlinear":
        space = Space(args.m, args.n)
        params = {"m": args.m, "n": args.n, "S": args.size, "t": args.t}
        counts = nonlinear_code_bounds(space, args.size, args.t)
        dens = nonlinear_density_bounds(space, args.size, args.t)
        results.append(ResultValue("bad_code_count_lower", counts.lower, "bound", "formula"))
        results.append(ResultValue("bad_code_count_upper", counts.upper, "bound", "formula"))
        results.append(ResultValue("theta", counts.theta, "exact", "formula"))
        results.append(ResultValue("density_lower", dens.lower, "bound", "formula"))
        results.append(ResultValue("density_upper", dens.upper, "bound", "formula"))
        if dens.raw_lower != dens.lower or dens.raw_upper != dens.upper:
            results.append(ResultValue("density_lower_raw", dens.raw_lower, "bound", "formula"))
            results.append(ResultValue("density_upper_raw", dens.raw_upper, "bound", "formula"))
            notes.append("bounds clamped to [0,1]; raw values retained")
        if args.exact:
            results.append(
                ResultValue(
                    "density_exact",
                    nonlinear_density_exact(space, args.size, args.t),
                    "exact",
                    "oracle",
                )
            )
    elif args.kind == "linear":
        params = {"p": args.p, "n": args.n, "k": args.k, "t": args.t}
        dens = linear_density_bounds(args.p, args.n, args.k, args.t)
        results.append(ResultValue("density_lower", dens.lower, "bound", "formula"))
        results.append(ResultValue("density_upper", dens.upper, "bound", "formula"))
        if dens.raw_lower != dens.lower or dens.raw_upper != dens.upper:
            results.append(ResultValue("density_lower_raw", dens.raw_lower, "bound", "formula"))
            results.append(ResultValue("density_upper_raw", dens.raw_upper, "bound", "formula"))
            notes.append("bounds clamped to [0,1]; raw values retained")
        if args.exact:
            results.append(
                ResultValue(
                    "density_exact",
                    linear_density_exact(args.p, args.n, args.k, args.t),
                    "exact",
                    "oracle",
                )
            )
    else:  # trend
        params = {
            "quantity": args.quantity,
            "vary": args.vary,
            "values": args.values,
        }
        base = {}
        for key in ("m", "n", "k", "t", "p"):
            value = getattr(args, key, None)
            if value is not None:
                base[key] = value
        if args.size is not None:
            base["S"] = args.size
        values = [int(v) for v in args.values.split(",")]
        base.pop(args.vary, None)
        table = trend_scan(args.quantity, base, args.vary, values)
        record = OutputRecord(
            "density trend",
            params,
            [ResultValue("direction", table.direction, "exact", "formula"),
             ResultValue("strict", table.strict, "exact", "formula")],
            [],
            rows=[
                {args.vary: row[args.vary], "value": _fraction(row["value"])}
                for row in table.rows
            ],
            row_columns=[args.vary, "value"],
        )
        _emit(record.render(args.format), args.out)
        return EXIT_OK
    record = OutputRecord(f"density {args.kind}", params, results, notes)
    _emit(record.render(args.format), args.out)
    return EXIT_OK


def _resolve_cm(args, space: Space, t: int):
    if args.cm is not None:
        return Fraction(args.cm), []
    if lemma_branch(space.m, t) == "odd_exceptional":
        estimate = estimate_constant_cm(space.m, range(2, max(4, space.n) + 1))
        return estimate.value, [
            f"constant estimated on lengths {list(estimate.n_values)}: {estimate.value}"
        ]
    return None, []


def _cmd_container(args) -> int:
    space = Space(args.m, args.n)
    graph = build_lee_graph(space, args.t)
    notes: list[str] = []
    if args.action == "build":
        params = {"m": args.m, "n": args.n, "t": args.t}
        results = [
            ResultValue("nodes", graph.node_count, "exact", "oracle"),
            ResultValue("degree", graph.degree, "exact", "oracle"),
            ResultValue("edges", graph.node_count * graph.degree // 2, "exact", "oracle"),
        ]
        record = OutputRecord("container build", params, results, notes)
    elif args.action == "count":
        params = {"m": args.m, "n": args.n, "t": args.t}
        results = [
            ResultValue(
                "independent_sets", count_independent_sets(graph), "exact", "oracle"
            )
        ]
        record = OutputRecord("container count", params, results, notes)
    elif args.action in ("run1", "run2"):
        params = {
            "m": args.m,
            "n": args.n,
            "t": args.t,
            "eps": Fraction(args.eps),
            "I": args.independent_set,
        }
        ind = _parse_words(space, args.independent_set)
        if args.action == "run1":
            cm, cm_notes = _resolve_cm(args, space, args.t)
            notes.extend(cm_notes)
            run = run_algorithm1(graph, ind, Fraction(args.eps), cm)
        else:
            h = Fraction(args.h) if args.h else hamming_bound(space, args.t)
            run = run_algorithm2(graph, ind, Fraction(args.eps), h)
        _emit(run.to_jsonl(), args.out)
        return EXIT_OK
    elif args.action == "family":
        params = {
            "m": args.m,
            "n": args.n,
            "t": args.t,
            "eps": Fraction(args.eps),
            "variant": args.variant,
        }
        variant = ALGORITHM_DEGREE if args.variant == "1" else ALGORITHM_COUNT
        cm, cm_notes = _resolve_cm(args, space, args.t) if variant == ALGORITHM_DEGREE else (None, [])
        notes.extend(cm_notes)
        family = build_container_family(graph, Fraction(args.eps), variant, cm=cm)
        results = [
            ResultValue("members", len(family.members), "exact", "replay"),
            ResultValue("coverage_ok", family.coverage_ok, "exact", "replay"),
            ResultValue("counting_ok", family.counting_ok, "exact", "replay"),
            ResultValue(
                "independent_sets", family.independent_set_count, "exact", "oracle"
            ),
            ResultValue("member_count_sum", family.member_count_sum, "exact", "oracle"),
        ]
        record = OutputRecord("container family", params, results, notes)
        if not (family.coverage_ok and family.counting_ok):
            _emit(record.render(args.format), args.out)
            return EXIT_INVARIANT
    else:  # supersat
        params = {
            "m": args.m,
            "n": args.n,
            "t": args.t,
            "C": args.subset,
            "eps": Fraction(args.eps),
        }
        subset = _parse_words(space, args.subset)
        cm, cm_notes = _resolve_cm(args, space, args.t)
        notes.extend(cm_notes)
        report = supersaturation_report(
            graph, subset, cm=cm, epsilon=Fraction(args.eps)
        )
        results = [
            ResultValue("subset_size", report.subset_size, "exact", "oracle"),
            ResultValue("hamming", report.hamming, "exact", "formula"),
            ResultValue("dense_hypothesis", report.dense_hypothesis, "exact", "formula"),
            ResultValue("weighted_pair_sum", report.weighted_pair_sum, "exact", "oracle"),
            ResultValue("weighted_pair_lower", report.weighted_pair_lower, "bound", "formula"),
            ResultValue("weighted_pair_ok", str(report.weighted_pair_ok), "exact", "formula"),
            ResultValue("edge_count", report.edge_count, "exact", "oracle"),
            ResultValue("edge_lower", report.edge_lower, "bound", "formula"),
            ResultValue("edge_ok", str(report.edge_ok), "exact", "formula"),
            ResultValue("gamma", report.gamma, "exact", "formula"),
            ResultValue("pair_lower", report.pair_lower, "bound", "formula"),
            ResultValue("pair_ok", str(report.pair_ok), "exact", "formula"),
            ResultValue("low_degree_size", report.low_degree_size, "exact", "oracle"),
            ResultValue("high_degree_size", report.high_degree_size, "exact", "oracle"),
        ]
        record = OutputRecord("container supersat", params, results, notes)
    _emit(record.render(args.format), args.out)
    return EXIT_OK


def _cmd_compare(args) -> int:
    epsilon = Fraction(args.eps)
    cells = compare_table(args.m, args.t_max, args.n_max, epsilon, size=args.size)
    rows = []
    all_sharper = True
    for cell in cells:
        all_sharper &= cell.container_sharper
        rows.append(
            {
                "m": cell.m,
                "n": cell.n,
                "t": cell.t,
                "hamming": _fraction(cell.hamming),
                "size_cap": cell.size_cap,
                "container_bits": _decimal(cell.container_exponent),
                "bipartite_bits_lower": _decimal(cell.bipartite_lower),
                "bipartite_bits_estimate": _decimal(cell.bipartite_estimate),
                "bipartite_exactness": "exact" if cell.bipartite_exact is not None else "estimate",
                "sharper": "container" if cell.container_sharper else "undetermined",
            }
        )
    record = OutputRecord(
        "compare",
        {"m": args.m, "t_max": args.t_max, "n_max": args.n_max, "eps": epsilon,
         **({"size": args.size} if args.size is not None else {})},
        [ResultValue("container_sharper_everywhere", all_sharper, "exact", "formula")],
        [
            "container_bits = (1+eps) * m^n / v(n,t); bipartite bits bound the "
            "total count of codes with the stated minimum distance"
        ],
        rows=rows,
        row_columns=[
            "m",
            "n",
            "t",
            "hamming",
            "size_cap",
            "container_bits",
            "bipartite_bits_lower",
            "bipartite_bits_estimate",
            "bipartite_exactness",
            "sharper",
        ],
    )
    _emit(record.render(args.format), args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = verify_mod.run_suite(args.suite, seed=args.seed, preset=args.grid_preset)
    text = json.dumps(report, sort_keys=True, indent=2, default=str)
    if args.format == "table":
        lines = []

        def walk(rep):
            if "suites" in rep:
                for sub in rep["suites"]:
                    walk(sub)
                return
            for check in rep["checks"]:
                lines.append(
                    f"[{'PASS' if check['ok'] else 'FAIL'}] "
                    f"{rep['suite']}.{check['name']}"
                )

        walk(report)
        lines.append(f"suite {args.suite}: {'PASS' if report['ok'] else 'FAIL'}")
        text = "\n".join(lines)
    _emit(text, args.out)
    return EXIT_OK if report["ok"] else EXIT_INVARIANT


def _cmd_intersect(args) -> int:
    space = Space(args.m, args.n)
    params = {"m": args.m, "n": args.n, "t": args.t, "l": args.l}
    value = intersection_size(space, args.t, args.l)
    record = OutputRecord(
        "intersect",
        params,
        [ResultValue("intersection_size", value, "exact", "oracle")],
        ["canonical greedy second center; see intersection_size docs"],
    )
    _emit(record.render(args.format), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser wiring
# ---------------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="leelab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("volume", help="Lee ball volume")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--method", choices=("oracle", "closed", "bounds"), default="oracle")
    _add_common(p)
    p.set_defaults(func=_cmd_volume)

    p = sub.add_parser("intersect", help="intersection of two equal-radius balls")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-t", type=int, required=True)
    p.add_argument("-l", type=int, required=True, help="center distance")
    _add_common(p)
    p.set_defaults(func=_cmd_intersect)

    p = sub.add_parser("bounds", help="code-size bounds and exact sizes")
    bsub = p.add_subparsers(dest="bound", required=True)
    b = bsub.add_parser("hamming")
    b.add_argument("-m", type=int, required=True)
    b.add_argument("-n", type=int, required=True)
    b.add_argument("-t", type=int, required=True)
    _add_common(b)
    b.set_defaults(func=_cmd_bounds)
    b = bsub.add_parser("plotkin")
    b.add_argument("-p", type=int, required=True)
    b.add_argument("-s", type=int, default=1)
    b.add_argument("-n", type=int, required=True)
    b.add_argument("-t", type=int, required=True)
    _add_common(b)
    b.set_defaults(func=_cmd_bounds)
    b = bsub.add_parser("elias")
    b.add_argument("-m", type=int, required=True)
    b.add_argument("-n", type=int, required=True)
    b.add_argument("-d", type=int, required=True)
    b.add_argument("-r", type=int, required=True)
    _add_common(b)
    b.set_defaults(func=_cmd_bounds)
    b = bsub.add_parser("elias-preset")
    b.add_argument("-m", type=int, required=True)
    b.add_argument("-n", type=int, required=True)
    b.add_argument("-t", type=int, required=True)
    _add_common(b)
    b.set_defaults(func=_cmd_bounds)
    b = bsub.add_parser("gv")
    b.add_argument("-m", type=int, required=True)
    b.add_argument("-n", type=int, required=True)
    b.add_argument("-R", dest="rate", required=True, help="rate as a fraction, e.g. 1/2")
    _add_common(b)
    b.set_defaults(func=_cmd_bounds)
    b = bsub.add_parser("exact")
    b.add_argument("-m", type=int, required=True)
    b.add_argument("-n", type=int, required=True)
    b.add_argument("-d", type=int, required=True)
    _add_common(b)
    b.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("density", help="code density bounds and oracles")
    dsub = p.add_subparsers(dest="kind", required=True)
    d = dsub.add_parser("nonlinear")
    d.add_argument("-m", type=int, required=True)
    d.add_argument("-n", type=int, required=True)
    d.add_argument("-S", dest="size", type=int, required=True)
    d.add_argument("-t", type=int, required=True)
    d.add_argument("--exact", action="store_true")
    _add_common(d)
    d.set_defaults(func=_cmd_density)
    d = dsub.add_parser("linear")
    d.add_argument("-p", type=int, required=True)
    d.add_argument("-n", type=int, required=True)
    d.add_argument("-k", type=int, required=True)
    d.add_argument("-t", type=int, required=True)
    d.add_argument("--exact", action="store_true")
    _add_common(d)
    d.set_defaults(func=_cmd_density)
    d = dsub.add_parser("trend")
    d.add_argument("--quantity", required=True)
    d.add_argument("--vary", required=True)
    d.add_argument("--values", required=True, help="comma-separated integers")
    d.add_argument("-m", type=int)
    d.add_argument("-n", type=int)
    d.add_argument("-k", type=int)
    d.add_argument("-p", type=int)
    d.add_argument("-t", type=int)
    d.add_argument("-S", dest="size", type=int)
    _add_common(d)
    d.set_defaults(func=_cmd_density)

    p = sub.add_parser("container", help="Lee graph and container algorithms")
    csub = p.add_subparsers(dest="action", required=True)
    for action in ("build", "count"):
        c = csub.add_parser(action)
        c.add_argument("-m", type=int, required=True)
        c.add_argument("-n", type=int, required=True)
        c.add_argument("-t", type=int, required=True)
        _add_common(c)
        c.set_defaults(func=_cmd_container)
    for action in ("run1", "run2"):
        c = csub.add_parser(action)
        c.add_argument("-m", type=int, required=True)
        c.add_argument("-n", type=int, required=True)
        c.add_argument("-t", type=int, required=True)
        c.add_argument("--eps", required=True, help="epsilon as a fraction")
        c.add_argument(
            "-I",
            dest="independent_set",
            default="",
            help="comma-separated base-m digit strings",
        )
        if action == "run1":
            c.add_argument("--cm", default=None, help="odd-exceptional constant")
        else:
            c.add_argument("--h", default=None, help="count exponent; default m^n/v(n,t)")
        _add_common(c)
        c.set_defaults(func=_cmd_container)
    c = csub.add_parser("family")
    c.add_argument("-m", type=int, required=True)
    c.add_argument("-n", type=int, required=True)
    c.add_argument("-t", type=int, required=True)
    c.add_argument("--eps", required=True)
    c.add_argument("--variant", choices=("1", "2"), default="1")
    c.add_argument("--cm", default=None)
    _add_common(c)
    c.set_defaults(func=_cmd_container)
    c = csub.add_parser("supersat")
    c.add_argument("-m", type=int, required=True)
    c.add_argument("-n", type=int, required=True)
    c.add_argument("-t", type=int, required=True)
    c.add_argument("-C", dest="subset", required=True)
    c.add_argument("--eps", default="1")
    c.add_argument("--cm", default=None)
    _add_common(c)
    c.set_defaults(func=_cmd_container)

    p = sub.add_parser("compare", help="container vs bipartite count exponents")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--t-max", type=int, default=3)
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--eps", default="1/10")
    p.add_argument("--size", type=int, default=None, help="per-size mode")
    _add_common(p)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("verify", help="grid verification suites")
    p.add_argument("suite", choices=verify_mod.SUITES + ("all",))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--grid-preset", choices=("default", "quick"), default="default")
    p.add_argument("--format", choices=("table", "json"), default="json")
    p.add_argument("--out", metavar="FILE", default=None)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except CapacityError as exc:
        sys.stderr.write(f"capacity: {exc}\n")
        return EXIT_CAPACITY
    except InvariantViolation as exc:
        sys.stderr.write(f"invariant violation: {exc}\n")
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
