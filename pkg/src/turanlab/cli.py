"""Command-line front end.

Subcommands: construct, check, exact, verify-claims, report, bench.
Exit codes: 0 on success, 1 when any claim check reports a VIOLATION,
2 on usage errors (including malformed family specs and bad construction
parameters). A non-free graph found by ``check`` is a result, not an
error, so check exits 0.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from turanlab import bounds, constructions, patterns, verify
from turanlab.cache import ResultCache, default_cache_path
from turanlab.constructions import ConstructionError
from turanlab.core import GraphError
from turanlab.fields import FieldError
from turanlab.graph6 import Graph6Error, graph6_encode, read_graph6_file
from turanlab.patterns import FamilyParseError, FamilySpec, parse_family
from turanlab.search import SearchBudget, SearchError, extremal_table

GRAMMAR = """family spec grammar:
  family   := pattern ((";" | ",") pattern)*    (";" required when any K pattern present)
  pattern  := cycle | biclique
  cycle    := "C" INT                            e.g. C5      (cycle length >= 3)
  biclique := "K" INT "," INT ["-ind"]           e.g. K2,3    ("-ind" = induced copies only)
examples: "C4"   "C3,C5"   "C5;K2,2-ind"   "C3;C5;K2,2"
"""

_REPORT_COLUMNS = (
    "n", "family", "exact", "exact_is_proven", "construction_m",
    "bound_main", "bound_ltt", "c4c5_lower", "c4c5_upper",
    "ratio_exact_to_main", "ratio_construction_to_main", "ratio_ltt_to_main",
)

CLAIM_NAMES = (
    "blakley-roy",
    "walk-classes",
    "n2-bound",
    "erdos-gallai",
    "cherries",
    "3path-endpoints",
    "3path-max-edge",
    "decomposition",
    "triangle-density",
)

_CONSTRUCT_BUILDERS = {
    "projective-plane-incidence": lambda q, t: constructions.projective_plane_certificate(q),
    "furedi-k2t": lambda q, t: constructions.furedi_k2t_certificate(q, t),
    "bipartite-k2t": lambda q, t: constructions.bipartite_k2t_certificate(q, t),
    "bollobas-gyori": lambda q, t: constructions.bollobas_gyori_certificate(q),
}


class CliError(Exception):
    """Usage-level failure; the message is printed and the exit code is 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        print(GRAMMAR, file=sys.stderr, end="")
        raise SystemExit(2)


def _jsonable(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return str(x)


def _parse_n_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise CliError(f"bad --n value {text!r}: expected an integer or a..b") from None
    if a < 1 or b < a:
        raise CliError(f"bad --n range {text!r}: need 1 <= a <= b")
    return list(range(a, b + 1))


def _parse_family_arg(text: str) -> FamilySpec:
    try:
        return parse_family(text)
    except FamilyParseError as e:
        raise CliError(f"{e}\n{GRAMMAR}") from e


def _read_config(path: str | None) -> dict:
    if path is None:
        return {}
    cfg = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                key, sep, value = line.partition("=")
                if not sep:
                    raise CliError(f"{path}:{lineno}: expected key = value")
                cfg[key.strip()] = value.strip()
    except OSError as e:
        raise CliError(f"cannot read config {path}: {e}") from e
    return cfg


def _budget_from(args, cfg) -> SearchBudget | None:
    nodes = args.budget_nodes
    secs = args.budget_secs
    if nodes is None and "budget_nodes" in cfg:
        nodes = int(cfg["budget_nodes"])
    if secs is None and "budget_secs" in cfg:
        secs = float(cfg["budget_secs"])
    if nodes is None and secs is None:
        return None
    return SearchBudget(node_limit=nodes, time_limit=secs)


def _cache_from(args, cfg) -> ResultCache:
    if args.cache:
        return ResultCache(args.cache)
    if "cache" in cfg:
        return ResultCache(cfg["cache"])
    return ResultCache(default_cache_path())


def _write_json(path: str | None, payload) -> None:
    text = json.dumps(_jsonable(payload), indent=2, sort_keys=True)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load_graphs(path: str):
    try:
        return read_graph6_file(path)
    except OSError as e:
        raise CliError(f"cannot read {path}: {e}") from e
    except Graph6Error as e:
        raise CliError(f"bad graph6 input: {e}") from e


def _cmd_construct(args, cfg) -> int:
    builder = _CONSTRUCT_BUILDERS.get(args.name)
    if builder is None:
        known = ", ".join(sorted(_CONSTRUCT_BUILDERS))
        raise CliError(f"unknown construction {args.name!r}; known: {known}")
    if args.q is None:
        raise CliError("construct requires --q")
    try:
        cert = builder(args.q, args.t if args.t is not None else 2)
    except (ConstructionError, FieldError, GraphError) as e:
        raise CliError(f"construction failed: {e}") from e
    print(graph6_encode(cert.graph))
    payload = {
        "n": cert.n,
        "m": cert.m,
        "family": cert.family.canonical(),
        "ratio_to_asymptotic": cert.edge_to_bound_ratio,
        "params": cert.parameters,
    }
    _write_json(args.json, payload)
    return 0


def _cmd_check(args, cfg) -> int:
    family = _parse_family_arg(args.family)
    graphs = _load_graphs(args.input)
    records = []
    for i, g in enumerate(graphs):
        w = patterns.is_family_free(g, family)
        if w is None:
            print(f"graph {i}: free of {family}")
            records.append({"index": i, "n": g.n, "m": g.m, "free": True, "witness": None})
        else:
            print(f"graph {i}: contains {w.pattern} on vertices {w.vertices}")
            records.append(
                {
                    "index": i,
                    "n": g.n,
                    "m": g.m,
                    "free": False,
                    "witness": {"pattern": str(w.pattern), "vertices": list(w.vertices)},
                }
            )
    if args.json is not None:
        _write_json(args.json, records)
    return 0


def _cmd_exact(args, cfg) -> int:
    family = _parse_family_arg(args.family)
    n_values = _parse_n_range(args.n)
    budget = _budget_from(args, cfg)
    cache = _cache_from(args, cfg)
    try:
        records = extremal_table(n_values, family, budget=budget, cache=cache)
    except SearchError as e:
        raise CliError(str(e)) from e
    for rec in records:
        status = "exact" if rec.exact else "lower bound (budget hit)"
        print(
            f"ex({rec.n}, {{{family}}}) = {rec.max_edges}  [{status}; "
            f"nodes={rec.nodes}, witness={rec.witness}]"
        )
    if args.json is not None:
        _write_json(
            args.json,
            [
                {
                    "n": r.n,
                    "family": family.canonical(),
                    "max_edges": r.max_edges,
                    "exact": r.exact,
                    "witness": r.witness,
                    "nodes": r.nodes,
                }
                for r in records
            ],
        )
    return 0


def _claim_runner(name: str, g, k: int, t: int) -> verify.ClaimReport:
    if name == "blakley-roy":
        return verify.blakley_roy_check(g)
    if name == "walk-classes":
        return verify.not_good_walks_check(g, k, t)
    if name == "n2-bound":
        return _n2_all_roots(g, k)
    if name == "erdos-gallai":
        return verify.erdos_gallai_path_check(g, max(2, 2 * k - 2))
    if name == "cherries":
        return verify.limited_cherries_check(g, t)
    if name == "3path-endpoints":
        return verify.good_3path_endpoint_check(g, t)
    if name == "3path-max-edge":
        if g.m == 0:
            return verify.ClaimReport(
                "some edge starts >= 2d^2 - 84d good 3-paths",
                verify.SKIPPED,
                failed_hypotheses=("graph has no edges",),
            )
        return verify.max_good_3path_edge(g, t, k=max(2, k))[2]
    if name == "decomposition":
        return verify.kst_removal_check(g, 2, t)
    if name == "triangle-density":
        return verify.gyori_li_triangle_report(g, k)
    raise CliError(f"unknown claim {name!r}; known: {', '.join(CLAIM_NAMES)}")


def _n2_all_roots(g, k: int) -> verify.ClaimReport:
    """Worst-case aggregate of the second-layer edge bound over all roots."""
    worst = None
    for v in range(g.n):
        rep = verify.n2_edge_bound_check(g, v, k)
        if rep.verdict == verify.VIOLATION:
            return rep
        if worst is None or (rep.verdict == verify.HOLDS and worst.verdict != verify.HOLDS):
            worst = rep
        elif (
            rep.verdict == verify.HOLDS
            and worst.verdict == verify.HOLDS
            and (rep.lhs or 0) > (worst.lhs or 0)
        ):
            worst = rep
    if worst is None:
        return verify.ClaimReport(
            f"edges inside second layer <= (2k-4)|N2| (k={k})",
            verify.HOLDS,
            0,
            0,
            details={"note": "no vertices"},
        )
    return worst


def _cmd_verify_claims(args, cfg) -> int:
    graphs = _load_graphs(args.input)
    if args.claims == "all":
        names = list(CLAIM_NAMES)
    else:
        names = [s.strip() for s in args.claims.split(",") if s.strip()]
        for name in names:
            if name not in CLAIM_NAMES:
                raise CliError(f"unknown claim {name!r}; known: {', '.join(CLAIM_NAMES)}")
    k = args.k if args.k is not None else 2
    t = args.t if args.t is not None else 2
    records = []
    violations = 0
    for i, g in enumerate(graphs):
        for name in names:
            rep = _claim_runner(name, g, k, t)
            if rep.verdict == verify.VIOLATION:
                violations += 1
            print(f"graph {i} {name}: {rep.verdict}" + _side_note(rep))
            records.append(
                {
                    "graph_index": i,
                    "claim": name,
                    "statement": rep.claim,
                    "verdict": rep.verdict,
                    "lhs": rep.lhs,
                    "rhs": rep.rhs,
                    "failed_hypotheses": list(rep.failed_hypotheses),
                    "details": rep.details,
                }
            )
    if args.json is not None:
        _write_json(args.json, records)
    if violations:
        print(f"{violations} VIOLATION verdict(s)", file=sys.stderr)
        return 1
    return 0


def _side_note(rep: verify.ClaimReport) -> str:
    if rep.verdict == verify.SKIPPED:
        return f" ({'; '.join(rep.failed_hypotheses)})"
    if rep.lhs is not None and rep.rhs is not None:
        return f" (lhs={rep.lhs}, rhs={rep.rhs})"
    return ""


def _family_parameters(family: FamilySpec) -> tuple[tuple[int, int] | None, int | None]:
    """((s, t) of the first complete-bipartite pattern, k of the first odd
    cycle of length >= 5). A plain C4 pattern counts as K_{2,2}."""
    st = None
    for p in family.patterns:
        if p.kind == "kst":
            st = (p.a, p.b)
            break
    if st is None and any(p.kind == "cycle" and p.a == 4 for p in family.patterns):
        st = (2, 2)
    k = None
    for p in family.patterns:
        if p.kind == "cycle" and p.a >= 5 and p.a % 2 == 1:
            k = (p.a - 1) // 2
            break
    return st, k


def _construction_candidates(family: FamilySpec, max_n: int):
    """(n, m) of every certified construction instance of size <= max_n
    whose graph avoids the family; used for the construction_m column."""
    st, _ = _family_parameters(family)
    out = {}
    orders = [q for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16) if q * q <= max_n + 1]
    builds = []
    for q in orders:
        if 2 * (q * q + q + 1) <= max_n:
            builds.append(lambda q=q: constructions.projective_plane_certificate(q))
        if 3 * (q * q + q + 1) <= max_n:
            builds.append(lambda q=q: constructions.bollobas_gyori_certificate(q))
        if st is not None and st[0] == 2 and st[1] >= 2:
            t = st[1]
            if (q - 1) % (t - 1) == 0:
                if (q * q - 1) // (t - 1) <= max_n:
                    builds.append(lambda q=q, t=t: constructions.furedi_k2t_certificate(q, t))
                if 2 * (q * q - 1) // (t - 1) <= max_n:
                    builds.append(lambda q=q, t=t: constructions.bipartite_k2t_certificate(q, t))
    for build in builds:
        try:
            cert = build()
        except (ConstructionError, FieldError):
            continue
        if patterns.is_family_free(cert.graph, family) is None:
            out[cert.n] = max(out.get(cert.n, 0), cert.m)
    return out


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int, str)):
        return str(x)
    return f"{float(x):.6f}"


def _report_rows(family: FamilySpec, n_values, budget, cache) -> list[dict]:
    st, k = _family_parameters(family)
    records = {r.n: r for r in extremal_table(n_values, family, budget=budget, cache=cache)}
    cons = _construction_candidates(family, max(n_values))
    rows = []
    for n in n_values:
        rec = records.get(n)
        main = bounds.asymptotic_bound(n, *st) if st is not None and st[0] >= 2 else None
        ltt = (
            bounds.ltt_bound_principal(n, k, st[1])
            if st is not None and st[0] == 2 and k is not None
            else None
        )
        row = {
            "n": n,
            "family": family.canonical(),
            "exact": rec.max_edges if rec else None,
            "exact_is_proven": rec.exact if rec else None,
            "construction_m": cons.get(n),
            "bound_main": main,
            "bound_ltt": ltt,
            "c4c5_lower": bounds.pentagon_family_lower(n),
            "c4c5_upper": bounds.pentagon_family_upper(n),
            "ratio_exact_to_main": (rec.max_edges / main) if rec and main else None,
            "ratio_construction_to_main": (cons[n] / main) if n in cons and main else None,
            "ratio_ltt_to_main": (ltt / main) if ltt and main else None,
        }
        rows.append(row)
    return rows


def _csv_cell(x) -> str:
    # the family column embeds commas (K2,3), so it gets RFC-4180 quoting
    text = _fmt(x)
    if "," in text or '"' in text:
        return '"' + text.replace('"', '""') + '"'
    return text


def _rows_to_csv(rows) -> str:
    lines = [",".join(_REPORT_COLUMNS)]
    for row in rows:
        lines.append(",".join(_csv_cell(row[c]) for c in _REPORT_COLUMNS))
    return "\n".join(lines) + "\n"


def _cmd_report(args, cfg) -> int:
    family = _parse_family_arg(args.family)
    n_values = _parse_n_range(args.n)
    budget = _budget_from(args, cfg)
    if budget is None:
        # deterministic default so repeated runs emit identical bytes
        budget = SearchBudget(node_limit=1_000_000)
    cache = _cache_from(args, cfg)
    try:
        rows = _report_rows(family, n_values, budget, cache)
    except SearchError as e:
        raise CliError(str(e)) from e
    text = _rows_to_csv(rows)
    if args.csv:
        with open(args.csv, "w", encoding="ascii", newline="") as fh:
            fh.write(text)
        print(f"wrote {args.csv} ({len(rows)} rows)")
    else:
        print(text, end="")
    if args.json is not None:
        _write_json(args.json, rows)
    return 0


def _cmd_bench(args, cfg) -> int:
    from turanlab import bench

    return bench.run_bench(sizes=args.sizes, family_text=args.family or "C4")


def _build_parser() -> _Parser:
    parser = _Parser(prog="turanlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, budgets=False, io_json=True):
        p.add_argument("--config", help="key = value file for defaults")
        if budgets:
            p.add_argument("--budget-nodes", type=int, default=None)
            p.add_argument("--budget-secs", type=float, default=None)
            p.add_argument("--cache", help="extremal result cache path")
        if io_json:
            p.add_argument("--json", nargs="?", const="", default=None,
                           help="emit JSON (to a path, or stdout if bare)")

    p = sub.add_parser("construct", help="build and certify a named construction")
    p.add_argument("name", help="|".join(sorted(_CONSTRUCT_BUILDERS)))
    p.add_argument("--q", type=int, help="field order")
    p.add_argument("--t", type=int, help="codegree parameter (K_{2,t})")
    common(p)

    p = sub.add_parser("check", help="test graphs in a graph6 file against a family")
    p.add_argument("--family", required=True)
    p.add_argument("--input", required=True)
    common(p)

    p = sub.add_parser("exact", help="exact extremal edge counts over an n range")
    p.add_argument("--family", required=True)
    p.add_argument("--n", required=True, help="single value or a..b")
    common(p, budgets=True)

    p = sub.add_parser("verify-claims", help="run claim checkers over a graph6 file")
    p.add_argument("--input", required=True)
    p.add_argument("--claims", default="all", help="'all' or comma-separated names")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--t", type=int, default=None)
    common(p)

    p = sub.add_parser("report", help="CSV/JSON table joining exact values, constructions, and bound formulas")
    p.add_argument("--family", required=True)
    p.add_argument("--n", required=True, help="single value or a..b")
    p.add_argument("--csv", help="write CSV here instead of stdout")
    common(p, budgets=True)

    p = sub.add_parser("bench", help="compare the compiled and pure search kernels")
    p.add_argument("--sizes", default="6,7,8", help="comma-separated n values")
    p.add_argument("--family", default=None)
    common(p, io_json=False)

    return parser


_HANDLERS = {
    "construct": _cmd_construct,
    "check": _cmd_check,
    "exact": _cmd_exact,
    "verify-claims": _cmd_verify_claims,
    "report": _cmd_report,
    "bench": _cmd_bench,
}


def run_cli(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        cfg = _read_config(getattr(args, "config", None))
        return _HANDLERS[args.command](args, cfg)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except BrokenPipeError:  # pragma: no cover - downstream closed the pipe
        return 0


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
