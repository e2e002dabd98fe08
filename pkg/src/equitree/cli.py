"""Command-line surface: generate graphs, construct and verify colorings,
decide feasibility, compute exact thresholds, and run the oracle.

Exit codes form the contract: 0 on success or a positive answer, 1 on a
negative answer (infeasible, invalid certificate, disagreements found),
2 when the search budget runs out, 64 for malformed input, 65 for calls
outside a precondition, 66 when no reducible configuration exists.
argparse itself exits with 2 on bad flags, before any computation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bipartite import (
    construct_knn_11,
    construct_knn_inf2,
    detect_balanced_biclique,
    even_t_coloring,
    exact_va11,
    exact_vainf2,
    feasible_11,
    feasible_inf2,
    odd_q_11_coloring,
    odd_q_inf2_counts,
    realize_class_counts,
    relabel_for_sides,
)
from .coloring import (
    Params,
    TreeColoring,
    certificate_from_coloring,
    coloring_from_certificate,
    verify,
)
from .errors import (
    ConfigurationNotFoundError,
    InputFormatError,
    PreconditionError,
)
from .graph import (
    UNBOUNDED,
    Graph,
    complete_bipartite,
    cycle,
    dodecahedron,
    format_edge_list,
    hex_grid,
    maximal_outerplanar_random,
    parse_edge_list,
    path,
)
from .oracle import (
    BUDGET_EXCEEDED,
    FEASIBLE,
    SearchBudget,
    brute_force_search,
    cross_check_bipartite,
)
from .sparse import color_girth5, color_girth6, color_outerplanar

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_BUDGET = 2
EXIT_INPUT = 64
EXIT_PRECONDITION = 65
EXIT_NO_CONFIGURATION = 66


def _parse_bound(text: str):
    if text == "inf":
        return UNBOUNDED
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected an integer or 'inf', got {text!r}"
        ) from None
    if value < 0:
        raise argparse.ArgumentTypeError("bounds must be nonnegative")
    return value


def _read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        return Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputFormatError(f"cannot read {source}: {exc}") from exc


def _load_graph(source: str) -> Graph:
    return parse_edge_list(_read_text(source))


def _load_certificate(source: str):
    text = _read_text(source)
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"certificate is not valid JSON: {exc}") from exc
    return coloring_from_certificate(payload)


def _emit_dot(destination: str, g: Graph, coloring: TreeColoring) -> None:
    """Write the colored graph in DOT format, one HSV fill color per class."""
    lines = ["graph coloring {", "  node [style=filled];"]
    for v in range(g.n):
        c = coloring.colors[v]
        hue = (c - 1) / coloring.t
        lines.append(
            f'  {v} [label="{v}" colorclass={c} '
            f'fillcolor="{hue:.3f} 0.400 1.000"];'
        )
    for u, v in sorted(g.edges()):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    text = "\n".join(lines) + "\n"
    if destination == "-":
        sys.stdout.write(text)
    else:
        Path(destination).write_text(text, encoding="utf-8")


def _cmd_gen(args) -> int:
    if args.family == "dodecahedron":
        g = dodecahedron()
    else:
        if args.n is None:
            raise PreconditionError(
                f"--n is required for family {args.family!r}"
            )
        if args.family == "knn":
            g = complete_bipartite(args.n)
        elif args.family == "cycle":
            g = cycle(args.n)
        elif args.family == "path":
            g = path(args.n)
        elif args.family == "hexgrid":
            g = hex_grid(args.n, args.n)
        else:
            g = maximal_outerplanar_random(args.n, args.seed)
    sys.stdout.write(format_edge_list(g))
    return EXIT_OK


def _auto_biclique(n: int, params: Params) -> TreeColoring:
    """Construction choice for K_{n,n}: parity first, then feasibility."""
    t = params.t
    if t % 2 == 0:
        return even_t_coloring(n, t)
    caps_allow_11 = (params.k == UNBOUNDED or params.k >= 1) and (
        params.d == UNBOUNDED or params.d >= 1
    )
    if caps_allow_11 and feasible_11(n, t):
        return construct_knn_11(n, t)
    if params.d == UNBOUNDED or params.d >= 2:
        return construct_knn_inf2(n, t)
    raise PreconditionError(
        f"K_{{{n},{n}}} admits no equitable ({t},{params.k},{params.d})"
        "-tree-coloring by the matching-variant feasibility test"
    )


def _construct_coloring(g: Graph, params: Params, method: str) -> TreeColoring:
    t = params.t
    if method in ("even", "odd11", "classcounts"):
        sides = detect_balanced_biclique(g)
        if sides is None:
            raise PreconditionError(
                f"method {method!r} needs a balanced complete bipartite graph"
            )
        n = len(sides[0])
        if method == "even":
            base = even_t_coloring(n, t)
        elif method == "odd11":
            base = odd_q_11_coloring(n, t)
        else:
            try:
                ccv = odd_q_inf2_counts(n, t)
            except PreconditionError:
                witness = feasible_inf2(n, t)
                if witness is None:
                    raise PreconditionError(
                        f"K_{{{n},{n}}} has no equitable ({t},inf,2)"
                        "-tree-coloring"
                    ) from None
                ccv = witness
            base = realize_class_counts(n, t, ccv)
        return relabel_for_sides(base, *sides)
    if method == "girth5":
        return color_girth5(g, t)
    if method == "girth6":
        return color_girth6(g, t)
    if method == "outerplanar":
        return color_outerplanar(g, t)

    sides = detect_balanced_biclique(g)
    if sides is not None:
        return relabel_for_sides(_auto_biclique(len(sides[0]), params), *sides)
    if t == 1:
        # Only forests can take a single class; the caller verifies.
        return TreeColoring((1,) * g.n, 1)
    if params.k != UNBOUNDED or params.d != UNBOUNDED:
        raise PreconditionError(
            "finite degree or diameter caps are only supported for "
            "balanced complete bipartite inputs"
        )
    if t == 2:
        try:
            return color_girth6(g, 2)
        except (PreconditionError, ConfigurationNotFoundError):
            return color_outerplanar(g, 2)
    try:
        return color_girth5(g, t)
    except (PreconditionError, ConfigurationNotFoundError):
        return color_outerplanar(g, t)


def _cmd_construct(args) -> int:
    g = _load_graph(args.graph)
    params = Params(args.t, args.k, args.d)
    coloring = _construct_coloring(g, params, args.method)
    report = verify(g, coloring, params)
    if not report.verdict:
        raise PreconditionError(
            "no supported construction meets the requested bounds: "
            + report.first_violation
        )
    print(json.dumps(certificate_from_coloring(coloring, params)))
    if args.emit_dot:
        _emit_dot(args.emit_dot, g, coloring)
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    params, coloring = _load_certificate(args.cert)
    report = verify(g, coloring, params)
    if args.json:
        print(json.dumps({
            "verdict": report.verdict,
            "equitable": report.equitable,
            "first_violation": report.first_violation,
            "classes": [
                {
                    "size": c.size,
                    "is_forest": c.is_forest,
                    "max_degree": c.max_degree,
                    "diameter": c.diameter,
                }
                for c in report.classes
            ],
        }))
    elif report.verdict:
        print("valid")
    else:
        print(f"invalid: {report.first_violation}")
    return EXIT_OK if report.verdict else EXIT_NEGATIVE


def _witness_payload(witness) -> dict:
    return {
        "a": witness.a,
        "r": witness.r,
        "x1": witness.x1,
        "x2": witness.x2,
        "x1p": witness.x1p,
        "x2p": witness.x2p,
        "y1": witness.y1,
        "y2": witness.y2,
        "y1p": witness.y1p,
        "y2p": witness.y2p,
    }


def _cmd_feasible(args) -> int:
    if args.variant == "11":
        ok = feasible_11(args.knn, args.q)
        witness = None
    else:
        witness = feasible_inf2(args.knn, args.q)
        ok = witness is not None
    if args.json:
        payload = {
            "feasible": ok,
            "witness": _witness_payload(witness) if witness else None,
        }
        print(json.dumps(payload))
    else:
        print("feasible" if ok else "infeasible")
        if witness is not None:
            print(json.dumps(_witness_payload(witness)))
    return EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_exact_va(args) -> int:
    fn = exact_va11 if args.variant == "11" else exact_vainf2
    value = fn(args.knn)
    if args.json:
        print(json.dumps({"value": value}))
    else:
        print(value)
    return EXIT_OK


def _cmd_search(args) -> int:
    g = _load_graph(args.graph)
    params = Params(args.t, args.k, args.d)
    budget = SearchBudget(args.max_nodes, args.time_cap)
    result = brute_force_search(g, params, budget)
    if result.status == FEASIBLE:
        certificate = certificate_from_coloring(result.coloring, params)
        if args.json:
            print(json.dumps({
                "status": result.status,
                "nodes": result.nodes,
                "certificate": certificate,
            }))
        else:
            print(json.dumps(certificate))
        if args.emit_dot:
            _emit_dot(args.emit_dot, g, result.coloring)
        return EXIT_OK
    if args.json:
        print(json.dumps({
            "status": result.status,
            "nodes": result.nodes,
            "certificate": None,
        }))
    else:
        print(result.status)
    return EXIT_BUDGET if result.status == BUDGET_EXCEEDED else EXIT_NEGATIVE


def _cmd_cross_check(args) -> int:
    report = cross_check_bipartite(args.nmax, args.qmax)
    if args.json:
        print(json.dumps({
            "checked": report.checked,
            "disagreements": [
                {
                    "n": item.n,
                    "q": item.q,
                    "variant": item.variant,
                    "oracle_status": item.oracle_status,
                    "formula_feasible": item.formula_feasible,
                }
                for item in report.disagreements
            ],
        }))
    else:
        print(f"checked {report.checked} instances, "
              f"{len(report.disagreements)} disagreements")
        for item in report.disagreements:
            print(f"  n={item.n} q={item.q} variant={item.variant} "
                  f"oracle={item.oracle_status} "
                  f"formula={'feasible' if item.formula_feasible else 'infeasible'}")
    return EXIT_OK if report.clean else EXIT_NEGATIVE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equitree",
        description="Construct, verify, and decide equitable tree-colorings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a named graph family")
    gen.add_argument(
        "--family", required=True,
        choices=["knn", "cycle", "path", "dodecahedron", "hexgrid",
                 "outerplanar"],
    )
    gen.add_argument("--n", type=int)
    gen.add_argument("--seed", type=int, default=0)
    gen.set_defaults(func=_cmd_gen)

    con = sub.add_parser("construct", help="build a coloring certificate")
    con.add_argument("--graph", required=True)
    con.add_argument("--t", required=True, type=int)
    con.add_argument("--k", type=_parse_bound, default=UNBOUNDED)
    con.add_argument("--d", type=_parse_bound, default=UNBOUNDED)
    con.add_argument(
        "--method", default="auto",
        choices=["auto", "even", "odd11", "classcounts", "girth5", "girth6",
                 "outerplanar"],
    )
    con.add_argument("--emit-dot")
    con.set_defaults(func=_cmd_construct)

    ver = sub.add_parser("verify", help="check a certificate against a graph")
    ver.add_argument("--graph", required=True)
    ver.add_argument("--cert", required=True)
    ver.add_argument("--json", action="store_true")
    ver.set_defaults(func=_cmd_verify)

    fea = sub.add_parser("feasible", help="feasibility for K_{n,n}")
    fea.add_argument("--knn", required=True, type=int)
    fea.add_argument("--q", required=True, type=int)
    fea.add_argument("--variant", required=True, choices=["11", "inf2"])
    fea.add_argument("--json", action="store_true")
    fea.set_defaults(func=_cmd_feasible)

    exa = sub.add_parser("exact-va", help="exact strong threshold for K_{n,n}")
    exa.add_argument("--knn", required=True, type=int)
    exa.add_argument("--variant", required=True, choices=["11", "inf2"])
    exa.add_argument("--json", action="store_true")
    exa.set_defaults(func=_cmd_exact_va)

    sea = sub.add_parser("search", help="exhaustive search on a small graph")
    sea.add_argument("--graph", required=True)
    sea.add_argument("--t", required=True, type=int)
    sea.add_argument("--k", type=_parse_bound, default=UNBOUNDED)
    sea.add_argument("--d", type=_parse_bound, default=UNBOUNDED)
    sea.add_argument("--max-nodes", type=int, default=100_000_000)
    sea.add_argument("--time-cap", type=float, default=60.0)
    sea.add_argument("--json", action="store_true")
    sea.add_argument("--emit-dot")
    sea.set_defaults(func=_cmd_search)

    cro = sub.add_parser("cross-check",
                         help="compare formulas against the oracle")
    cro.add_argument("--nmax", required=True, type=int)
    cro.add_argument("--qmax", required=True, type=int)
    cro.add_argument("--json", action="store_true")
    cro.set_defaults(func=_cmd_cross_check)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConfigurationNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CONFIGURATION
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
