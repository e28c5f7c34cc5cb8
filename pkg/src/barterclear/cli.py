"""Command-line surface tying the solvers, reductions and formats together.

Exit codes: 0 success (or decision "yes"), 1 decision "no", 2 input error,
3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .approx import approx_jpc
from .assignment import solve_max_size
from .exact import (
    BudgetExceeded,
    Objective,
    SearchBudget,
    brute_force_best,
    solve_maxtex,
    solve_with_stats,
)
from .formats import (
    RunReport,
    gen_random,
    parse_dimacs,
    parse_gadget_map,
    parse_graph,
    parse_solution,
    parse_wantlist,
    serialize_gadget_map,
    serialize_graph,
    serialize_report,
    serialize_solution,
    _records,
)
from .graph import (
    canonical_cycle_set,
    cycle_vertices,
    validate_cycle_set,
    without_self_loops,
)
from .reductions import add_balance_vertices, build_2pc_graph, build_sat_graph
from .sat import is_satisfiable, max_satisfiable, satisfied_count

EXIT_OK = 0
EXIT_NO = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3


def _budget(args: argparse.Namespace) -> SearchBudget:
    return SearchBudget(node_limit=args.budget_nodes, time_limit=args.budget_secs)


def _load_graph(args: argparse.Namespace):
    text = Path(args.input).read_text()
    if getattr(args, "wantlist", False):
        return parse_wantlist(text)
    return parse_graph(text)


def _add_input_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--input", required=True, help="market file")
    fmt = sub.add_mutually_exclusive_group()
    fmt.add_argument("--wantlist", action="store_true", help="input is a want-list")
    fmt.add_argument("--graph", action="store_true", help="input is a graph file (default)")


def _add_budget_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--budget-nodes", type=int, default=SearchBudget().node_limit)
    sub.add_argument("--budget-secs", type=float, default=SearchBudget().time_limit)


def _cycle_names(g, s, names) -> tuple[tuple[str, ...], ...]:
    return tuple(
        tuple(names[v] for v in cycle_vertices(g, c))
        for c in canonical_cycle_set(g, s).cycles
    )


def cmd_clear(args: argparse.Namespace) -> int:
    g, names = _load_graph(args)
    if args.no_self_trades:
        g = without_self_loops(g)
    if args.method == "approx":
        solution, guarantee = approx_jpc(g)
        nodes, seconds = 0, 0.0
        guarantee_text = str(guarantee)
    else:
        solution, stats = solve_with_stats(g, Objective(args.objective), _budget(args))
        nodes, seconds = stats.nodes, stats.seconds
        guarantee_text = ""
    # a run never emits a solution it cannot verify
    metrics = validate_cycle_set(g, solution)
    Path(args.output).write_text(serialize_solution(g, solution, names))
    report = RunReport(
        objective=args.objective,
        method=args.method,
        vertex_count=metrics.vertex_count,
        color_count=metrics.color_count,
        total_colors=g.color_count,
        traded_agents=metrics.color_count,
        nodes=nodes,
        seconds=seconds,
        guarantee=guarantee_text,
        cycles=_cycle_names(g, solution, names),
    )
    sys.stdout.write(serialize_report(report))
    if args.min_vertices is not None and metrics.vertex_count < args.min_vertices:
        return EXIT_NO
    return EXIT_OK


def cmd_decide(args: argparse.Namespace) -> int:
    g, _ = _load_graph(args)
    budget = _budget(args)
    if args.objective in ("exchange-x", "maxtex-x") and args.x is None:
        raise ValueError(f"--x is required for {args.objective}")
    if args.objective == "exchange-x":
        metrics = validate_cycle_set(g, solve_max_size(g))
        answer = metrics.vertex_count >= args.x
    elif args.objective == "tex":
        metrics = validate_cycle_set(g, solve_with_stats(g, Objective.MAX_COLORS, budget)[0])
        answer = metrics.color_count == g.color_count
    elif args.objective == "tmaxex":
        metrics = validate_cycle_set(
            g, solve_with_stats(g, Objective.MAX_COLORS_AMONG_MAX_VERTICES, budget)[0]
        )
        answer = metrics.color_count == g.color_count
    else:  # maxtex-x
        metrics = validate_cycle_set(g, solve_maxtex(g, budget))
        answer = metrics.vertex_count >= args.x
    print("YES" if answer else "NO")
    print(f"vertices {metrics.vertex_count}")
    print(f"colors {metrics.color_count} of {g.color_count}")
    return EXIT_OK if answer else EXIT_NO


def cmd_reduce(args: argparse.Namespace) -> int:
    cnf = parse_dimacs(Path(args.cnf).read_text())
    if args.variant == "plain":
        art = build_sat_graph(cnf)
    elif args.variant == "balanced":
        art = add_balance_vertices(build_sat_graph(cnf))
    else:
        art = build_2pc_graph(cnf)
    Path(args.output).write_text(serialize_graph(art.graph))
    Path(args.map).write_text(serialize_gadget_map(art))
    print(f"vertices {art.graph.vertex_count}")
    print(f"colors {art.graph.color_count}")
    print(f"balance-vertices {art.num_balance}")
    return EXIT_OK


def cmd_pullback(args: argparse.Namespace) -> int:
    gm = parse_gadget_map(Path(args.map).read_text())
    chosen: list[frozenset[str]] = []
    for lineno, tokens in _records(Path(args.solution).read_text()):
        if tokens[0] != "C" or len(tokens) < 2:
            raise ValueError(f"solution line {lineno}: expected 'C <vertices>'")
        chosen.append(frozenset(tokens[1:]))
    assignment = {}
    for i in range(1, gm.num_vars + 1):
        if frozenset(gm.true_loops[i]) in chosen:
            assignment[i] = True
        elif frozenset(gm.false_loops[i]) in chosen:
            assignment[i] = False
        else:
            assignment[i] = True  # unselected variables default to TRUE
    for i in range(1, gm.num_vars + 1):
        print(f"x{i} {'T' if assignment[i] else 'F'}")
    cnf = gm.cnf()
    print(f"satisfied {satisfied_count(cnf, assignment)} of {cnf.num_clauses}")
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    if args.graph_file is not None:
        if args.objective is None:
            raise ValueError("--objective is required with --graph")
        g, names = parse_graph(Path(args.graph_file).read_text())
        best = brute_force_best(g, Objective(args.objective))
        metrics = validate_cycle_set(g, best)
        print(f"vertices {metrics.vertex_count}")
        print(f"colors {metrics.color_count} of {g.color_count}")
        sys.stdout.write(serialize_solution(g, best, names))
        return EXIT_OK
    if not args.sat and not args.maxsat:
        raise ValueError("--sat or --maxsat is required with --cnf")
    cnf = parse_dimacs(Path(args.cnf).read_text())
    if args.sat:
        answer = is_satisfiable(cnf)
        print("SATISFIABLE" if answer else "UNSATISFIABLE")
        return EXIT_OK if answer else EXIT_NO
    count, witness = max_satisfiable(cnf)
    print(f"max-satisfiable {count} of {cnf.num_clauses}")
    for i in range(1, cnf.num_vars + 1):
        print(f"x{i} {'T' if witness[i] else 'F'}")
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    g = gen_random(args.vertices, args.colors, args.edge_prob, args.seed)
    Path(args.output).write_text(serialize_graph(g))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g, names = parse_graph(Path(args.graph_file).read_text())
    s = parse_solution(Path(args.solution).read_text(), g, names)
    metrics = validate_cycle_set(g, s)
    print(f"vertices {metrics.vertex_count}")
    print(f"colors {metrics.color_count} of {g.color_count}")
    print(f"tropical {'yes' if metrics.color_count == g.color_count else 'no'}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="barterclear",
        description="Barter-exchange clearing over vertex-colored trading graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    clear = sub.add_parser("clear", help="solve a clearing instance")
    _add_input_options(clear)
    clear.add_argument(
        "--objective",
        required=True,
        choices=["max-size", "tex", "tmaxex", "maxtex"],
    )
    clear.add_argument("--method", default="exact", choices=["exact", "approx"])
    clear.add_argument("--min-vertices", type=int, default=None,
                       help="exit 1 unless the solution trades at least this many items")
    clear.add_argument("--no-self-trades", action="store_true",
                       help="drop self-loop edges before solving")
    _add_budget_options(clear)
    clear.add_argument("--output", required=True, help="solution file to write")
    clear.set_defaults(func=cmd_clear)

    decide = sub.add_parser("decide", help="answer a decision problem (exit 0 yes, 1 no)")
    _add_input_options(decide)
    decide.add_argument(
        "--objective",
        required=True,
        choices=["exchange-x", "tex", "tmaxex", "maxtex-x"],
    )
    decide.add_argument("--x", type=int, default=None, help="vertex threshold")
    _add_budget_options(decide)
    decide.set_defaults(func=cmd_decide)

    reduce_ = sub.add_parser("reduce", help="compile a DIMACS CNF into a gadget graph")
    reduce_.add_argument("--cnf", required=True)
    reduce_.add_argument("--variant", default="plain", choices=["plain", "balanced", "2pc"])
    reduce_.add_argument("--output", required=True, help="graph file to write")
    reduce_.add_argument("--map", required=True, help="sidecar map file to write")
    reduce_.set_defaults(func=cmd_reduce)

    pullback = sub.add_parser("pullback", help="read a truth assignment off a solution")
    pullback.add_argument("--map", required=True)
    pullback.add_argument("--solution", required=True)
    pullback.set_defaults(func=cmd_pullback)

    oracle = sub.add_parser("oracle", help="brute-force ground truth (small inputs)")
    source = oracle.add_mutually_exclusive_group(required=True)
    source.add_argument("--graph", dest="graph_file")
    source.add_argument("--cnf")
    oracle.add_argument(
        "--objective", choices=["max-size", "tex", "tmaxex", "maxtex"], default=None
    )
    mode = oracle.add_mutually_exclusive_group()
    mode.add_argument("--sat", action="store_true")
    mode.add_argument("--maxsat", action="store_true")
    oracle.set_defaults(func=cmd_oracle)

    gen = sub.add_parser("gen", help="generate a seeded random market")
    gen.add_argument("--vertices", type=int, required=True)
    gen.add_argument("--colors", type=int, required=True)
    gen.add_argument("--edge-prob", type=float, required=True)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--output", required=True)
    gen.set_defaults(func=cmd_gen)

    verify = sub.add_parser("verify", help="validate a solution against its graph")
    verify.add_argument("--graph", dest="graph_file", required=True)
    verify.add_argument("--solution", required=True)
    verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
