"""Command-line front end.

Subcommands:
    analyze --graph <spec> --k <int|max> [--json] [--dot PATH] [--circuit]
    scan    --family <name> --n <a>..<b> [--k all|<int>] [--filter eulerian]
            [--csv PATH] [--jobs N]
    verify  --claim <id|all> [--max-n N] [--jobs N] [--json] [--negative-control]
    export  --graph <spec> [--k <int|max>] --format <dot|csv|g6>

Graph specs: path:7, cycle:7, complete:5, biclique:3,4, star:5, cocktail:6,
turan:6,3, corona:path:3, union:path:2+cycle:3, g6:<record>, file:<path>.

Exit codes: 0 all checks passed / analysis done; 1 a verified claim failed;
2 usage or parse error; 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .domination import domination_profile
from .errors import (
    BoundBelowGamma,
    BoundExceeded,
    CapacityExceeded,
    ClaimUnknown,
    DomrecError,
    GraphSpecError,
    InvalidFamilyParameters,
    MalformedGraph6,
    ReconfigTooLarge,
    UncharacterizedInstance,
)
from .graphs import FamilySpec, SeedGraph, disjoint_union, corona_of, make_family
from .graphs import parse_graph6, to_graph6
from .reconfig import (
    build_reconfig,
    euler_circuit,
    eulerian_report,
    reconfig_to_csv,
    reconfig_to_dot,
)
from .theorems import (
    ClaimId,
    expected_eulerian,
    expected_eulerian_unrestricted,
    max_n_override,
    negative_control_characterization,
    verify_claim,
)

_SIMPLE_FAMILIES = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "star": 1,
    "cocktail": 1,
    "biclique": 2,
    "complete_bipartite": 2,
    "turan": 2,
}


def parse_graph_spec(text: str, offset: int = 0) -> tuple[SeedGraph, FamilySpec | None]:
    """Parse one textual graph spec; returns the seed graph plus its
    FamilySpec when the spec names a generated family (None for g6/file and
    for nestings a FamilySpec cannot express)."""
    head, sep, rest = text.partition(":")
    if not sep:
        raise GraphSpecError(f"expected ':' after {head!r}", offset)
    body_at = offset + len(head) + 1
    if head == "g6":
        if not rest:
            raise GraphSpecError("empty graph6 record", body_at)
        return parse_graph6(rest), None
    if head == "file":
        return _read_edge_list(rest, body_at), None
    if head == "corona":
        inner_g, inner_spec = parse_graph_spec(rest, body_at)
        if inner_g.n < 2:
            raise GraphSpecError("corona needs an inner graph on >= 2 vertices", body_at)
        g = corona_of(inner_g)
        spec = FamilySpec.corona(inner_spec) if inner_spec is not None else None
        name = f"corona:{inner_g.name}" if inner_g.name else None
        return SeedGraph(g.n, g.adj, name=name, validate=False), spec
    if head == "union":
        parts = []
        specs: list[FamilySpec | None] = []
        at = body_at
        for chunk in rest.split("+"):
            if not chunk:
                raise GraphSpecError("empty union component", at)
            g, s = parse_graph_spec(chunk, at)
            parts.append(g)
            specs.append(s)
            at += len(chunk) + 1
        if len(parts) < 2:
            raise GraphSpecError("union needs at least two components", body_at)
        g = disjoint_union(parts)
        spec = None
        if all(s is not None for s in specs):
            spec = FamilySpec.disjoint_union(*specs)
        name = "union:" + "+".join(p.name or "?" for p in parts)
        return SeedGraph(g.n, g.adj, name=name, validate=False), spec
    if head in _SIMPLE_FAMILIES:
        arity = _SIMPLE_FAMILIES[head]
        args = []
        at = body_at
        for piece in rest.split(","):
            try:
                args.append(int(piece))
            except ValueError:
                raise GraphSpecError(f"expected an integer, got {piece!r}", at) from None
            at += len(piece) + 1
        if len(args) != arity:
            raise GraphSpecError(
                f"{head} takes {arity} argument(s), got {len(args)}", body_at
            )
        kind = "complete_bipartite" if head == "biclique" else head
        spec = FamilySpec(kind, tuple(args))
        try:
            return make_family(spec), spec
        except InvalidFamilyParameters as exc:
            raise GraphSpecError(str(exc), body_at) from None
    raise GraphSpecError(f"unknown graph kind {head!r}", offset)


def _read_edge_list(path: str, at: int) -> SeedGraph:
    """Edge list file: one 'u v' pair per line; n is one above the top vertex."""
    try:
        with open(path) as fh:
            lines = fh.read().split("\n")
    except OSError as exc:
        raise GraphSpecError(f"cannot read {path!r}: {exc}", at) from None
    edges = []
    top = -1
    for ln, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise GraphSpecError(f"{path}:{ln}: expected 'u v'", at)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphSpecError(f"{path}:{ln}: expected integers", at) from None
        if u < 0 or v < 0 or u == v:
            raise GraphSpecError(f"{path}:{ln}: bad edge ({u}, {v})", at)
        edges.append((u, v))
        top = max(top, u, v)
    return SeedGraph.from_edges(top + 1, edges, name=f"file:{path}")


def _parse_k(text: str, n: int) -> int:
    if text == "max":
        return n
    try:
        return int(text)
    except ValueError:
        raise GraphSpecError(f"--k must be an integer or 'max', got {text!r}") from None


def _expected_or_none(spec: FamilySpec | None, g: SeedGraph, k: int) -> bool | None:
    if k == g.n:
        return expected_eulerian_unrestricted(g)
    if spec is None:
        return None
    try:
        return expected_eulerian(spec, k)
    except UncharacterizedInstance:
        return None


def _bool_json(value):
    return value if value is None else bool(value)


def analysis_report(g: SeedGraph, spec: FamilySpec | None, k: int, r=None) -> dict:
    profile = domination_profile(g)
    if r is None:
        r = build_reconfig(g, k)
    rep = eulerian_report(r)
    expected = _expected_or_none(spec, g, k)
    out = {
        "seed": {
            "name": g.name or f"g6:{to_graph6(g)}",
            "n": g.n,
            "edges": g.edge_count(),
            "gamma": profile.gamma,
            "upper_gamma": profile.upper_gamma,
            "well_dominated": profile.well_dominated,
            "universal_threshold": profile.universal_threshold,
        },
        "k": k,
        "reconfig": {
            "node_count": r.node_count,
            "edge_count": r.edge_count,
            "degree_histogram": {str(d): c for d, c in r.degree_histogram().items()},
        },
        "euler": {
            "node_count": rep.node_count,
            "edge_count": rep.edge_count,
            "odd_degree_count": rep.odd_degree_count,
            "odd_degree_nodes": [str(vs) for vs in rep.odd_degree_nodes],
            "isolated_count": rep.isolated_count,
            "nontrivial_component_count": rep.nontrivial_component_count,
            "is_connected": rep.is_connected,
            "is_eulerian": rep.is_eulerian,
        },
    }
    if expected is not None:
        out["expected_eulerian"] = bool(expected)
        out["match"] = bool(expected) == rep.is_eulerian
    return out


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _format_analysis_text(report: dict, circuit_labels: list[str] | None) -> str:
    seed = report["seed"]
    rc = report["reconfig"]
    eu = report["euler"]
    lines = [
        f"seed {seed['name']}: n={seed['n']}, edges={seed['edges']}, "
        f"gamma={seed['gamma']}, Gamma={seed['upper_gamma']}, "
        f"well-dominated={_yesno(seed['well_dominated'])}, "
        f"universal-threshold={seed['universal_threshold']}",
        f"reconfig k={report['k']}: {rc['node_count']} nodes, {rc['edge_count']} edges",
        "degree histogram: "
        + ", ".join(f"{d}:{c}" for d, c in rc["degree_histogram"].items()),
        f"eulerian: {_yesno(eu['is_eulerian'])} "
        f"(odd-degree nodes: {eu['odd_degree_count']}, "
        f"non-trivial components: {eu['nontrivial_component_count']}, "
        f"isolated: {eu['isolated_count']}, connected: {_yesno(eu['is_connected'])})",
    ]
    if eu["odd_degree_nodes"]:
        lines.append("odd-degree witnesses: " + ", ".join(eu["odd_degree_nodes"]))
    if "expected_eulerian" in report:
        lines.append(
            f"expected: {_yesno(report['expected_eulerian'])}, "
            f"match: {_yesno(report['match'])}"
        )
    if circuit_labels is not None:
        walk = " -> ".join(circuit_labels) if circuit_labels else "none"
        lines.append(f"euler circuit: {walk}")
    return "\n".join(lines)


def _cmd_analyze(args) -> int:
    g, spec = parse_graph_spec(args.graph)
    k = _parse_k(args.k, g.n)
    r = build_reconfig(g, k)
    report = analysis_report(g, spec, k, r)
    circuit_labels = None
    if args.circuit:
        rep = eulerian_report(r)
        if rep.is_eulerian and rep.edge_count > 0:
            circuit_labels = [str(r.label(i)) for i in euler_circuit(r)]
        else:
            circuit_labels = []
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(reconfig_to_dot(r))
    if args.json:
        payload = dict(report)
        if circuit_labels is not None:
            payload["euler_circuit"] = circuit_labels
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(_format_analysis_text(report, circuit_labels))
    return 0


_SCAN_FAMILIES = ("path", "cycle", "complete", "biclique", "cocktail", "complete_k", "corona")

_CSV_COLUMNS = (
    "family", "n", "k", "gamma", "nodes", "edges",
    "odd_degree_count", "nontrivial_components", "is_eulerian", "expected", "match",
)


def _scan_instances(family: str, lo: int, hi: int) -> list[str]:
    """Graph-spec strings for one family over an n range."""
    if family in ("complete", "complete_k"):
        return [f"complete:{n}" for n in range(max(lo, 1), hi + 1)]
    if family == "path":
        return [f"path:{n}" for n in range(max(lo, 1), hi + 1)]
    if family == "cycle":
        return [f"cycle:{n}" for n in range(max(lo, 3), hi + 1)]
    if family == "cocktail":
        return [f"cocktail:{n}" for n in range(max(lo + lo % 2, 4), hi + 1, 2)]
    if family == "biclique":
        return [
            f"biclique:{m},{n}"
            for n in range(max(lo, 1), hi + 1)
            for m in range(1, n + 1)
        ]
    if family == "corona":
        return [f"corona:path:{n}" for n in range(max(lo, 2), hi + 1)]
    raise GraphSpecError(f"unknown scan family {family!r}")


def scan_row(spec_string: str, k: int) -> dict:
    g, spec = parse_graph_spec(spec_string)
    profile = domination_profile(g)
    r = build_reconfig(g, k)
    rep = eulerian_report(r)
    expected = _expected_or_none(spec, g, k)
    return {
        "family": spec_string,
        "n": g.n,
        "k": k,
        "gamma": profile.gamma,
        "nodes": rep.node_count,
        "edges": rep.edge_count,
        "odd_degree_count": rep.odd_degree_count,
        "nontrivial_components": rep.nontrivial_component_count,
        "is_eulerian": rep.is_eulerian,
        "expected": expected,
        "match": None if expected is None else expected == rep.is_eulerian,
    }


def _scan_worker(task: tuple[str, int]) -> dict:
    return scan_row(*task)


def _cmd_scan(args) -> int:
    if args.family not in _SCAN_FAMILIES:
        raise GraphSpecError(
            f"--family must be one of {', '.join(_SCAN_FAMILIES)}, got {args.family!r}"
        )
    try:
        lo_text, _, hi_text = args.n.partition("..")
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise GraphSpecError(f"--n must look like 3..8, got {args.n!r}") from None
    tasks: list[tuple[str, int]] = []
    for spec_string in _scan_instances(args.family, lo, hi):
        g, _ = parse_graph_spec(spec_string)
        gamma = domination_profile(g).gamma
        if args.k == "all":
            ks = range(gamma, g.n + 1)
        else:
            single = _parse_k(args.k, g.n)
            ks = [single] if gamma <= single <= g.n else []
        tasks.extend((spec_string, k) for k in ks)
    if args.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_scan_worker, tasks))
    else:
        rows = [scan_row(*task) for task in tasks]
    if args.filter == "eulerian":
        rows = [row for row in rows if row["is_eulerian"]]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_COLUMNS)
    for row in rows:
        writer.writerow(
            [
                "" if row[col] is None
                else (str(row[col]).lower() if isinstance(row[col], bool) else row[col])
                for col in _CSV_COLUMNS
            ]
        )
    text = buf.getvalue()
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _verify_worker(task: tuple[str, dict]):
    claim, bounds = task
    return verify_claim(claim, **bounds)


def _cmd_verify(args) -> int:
    if args.negative_control:
        if args.claim != ClaimId.DOMINATING_GRAPH_CHARACTERIZATION.value:
            raise GraphSpecError(
                "--negative-control applies to --claim dominating_graph_characterization"
            )
        n = min(args.max_n, 6) if args.max_n else 6
        reports = [negative_control_characterization(n)]
    else:
        if args.claim == "all":
            claims = list(ClaimId)
        else:
            try:
                claims = [ClaimId(args.claim)]
            except ValueError:
                raise ClaimUnknown(f"unknown claim {args.claim!r}") from None
        tasks = [
            (c.value, max_n_override(c, args.max_n) if args.max_n else {})
            for c in claims
        ]
        if args.jobs > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                reports = list(pool.map(_verify_worker, tasks))
        else:
            reports = [_verify_worker(task) for task in tasks]
    if args.json:
        print(json.dumps([r.to_json_dict() for r in reports], sort_keys=True, indent=2))
    else:
        for rep in reports:
            status = "PASS" if rep.passed else "FAIL"
            print(
                f"{status} {rep.claim} "
                f"(instances={rep.instances_checked}, elapsed={rep.elapsed:.2f}s)"
            )
            for ce in rep.counterexamples[:3]:
                print(
                    f"  counterexample: seed={ce['seed']} k={ce['k']} "
                    f"expected={ce['expected']} computed={ce['computed']}"
                )
            extra = rep.details.get("counterexample_count", 0) - len(rep.counterexamples)
            if extra > 0:
                print(f"  ... and {extra} more")
    return 0 if all(r.passed for r in reports) else 1


def _cmd_export(args) -> int:
    g, _ = parse_graph_spec(args.graph)
    if args.format == "g6":
        print(to_graph6(g))
        return 0
    k = _parse_k(args.k, g.n)
    r = build_reconfig(g, k)
    if args.format == "dot":
        sys.stdout.write(reconfig_to_dot(r, label_style=args.labels))
    else:
        sys.stdout.write(reconfig_to_csv(r))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domrec",
        description="Analyze k-dominating reconfiguration graphs and verify the claim catalog.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze one (graph, k) instance")
    p.add_argument("--graph", required=True, help="graph spec, e.g. path:4 or g6:Cr")
    p.add_argument("--k", required=True, help="cardinality bound, an integer or 'max'")
    p.add_argument("--json", action="store_true", help="JSON output")
    p.add_argument("--dot", metavar="PATH", help="also write the reconfiguration graph as DOT")
    p.add_argument("--circuit", action="store_true", help="append an Euler circuit when one exists")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("scan", help="sweep a family, one CSV row per (instance, k)")
    p.add_argument("--family", required=True, help="|".join(_SCAN_FAMILIES))
    p.add_argument("--n", required=True, help="inclusive range, e.g. 3..10")
    p.add_argument("--k", default="all", help="'all' (default) or a single integer")
    p.add_argument("--filter", choices=["eulerian"], help="keep only Eulerian rows")
    p.add_argument("--csv", metavar="PATH", help="write CSV here instead of stdout")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("verify", help="verify catalogued claims")
    p.add_argument("--claim", required=True, help="claim id or 'all'")
    p.add_argument("--max-n", type=int, default=None, dest="max_n",
                   help="override the claim's primary size bound")
    p.add_argument("--jobs", type=int, default=1, help="worker processes across claims")
    p.add_argument("--json", action="store_true", help="JSON reports")
    p.add_argument("--negative-control", action="store_true",
                   help="plant a mutated cocktail seed and require the harness to flag it")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("export", help="export a reconfiguration graph or seed")
    p.add_argument("--graph", required=True, help="graph spec")
    p.add_argument("--k", default="max", help="cardinality bound (ignored for g6)")
    p.add_argument("--format", required=True, choices=["dot", "csv", "g6"])
    p.add_argument("--labels", choices=["set", "bits"], default="set",
                   help="DOT node labels as '{0,2}' or bitstrings")
    p.set_defaults(func=_cmd_export)
    return parser


def run_cli(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (GraphSpecError, MalformedGraph6, InvalidFamilyParameters,
            BoundBelowGamma, BoundExceeded, ClaimUnknown, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CapacityExceeded, ReconfigTooLarge) as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return 3
    except DomrecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
