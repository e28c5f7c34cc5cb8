"""Text formats: graphs, solutions, want-lists, DIMACS CNF, gadget maps, reports.

Graph files carry one record per line (`#` starts a comment, tokens are
whitespace-separated): ``V <vertex-id> <color-label>`` declares a vertex,
``E <from-id> <to-id>`` an edge; repeated E records make parallel edges.
Solution files carry ``C <v1> <v2> ... <vk>`` records meaning the cycle
v1 -> v2 -> ... -> vk -> v1; when parallel edges exist between consecutive
vertices the lowest edge id is taken.  Want-lists use the community format
``<agent> <item> : <item>*``.  Parsing a serialized canonical object gives
the object back exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graph import (
    Cycle,
    ColoredDigraph,
    CycleSet,
    build_graph,
    canonical_cycle_set,
    cycle_from_vertices,
    cycle_vertices,
    NonexistentEdge,
)
from .reductions import ReductionArtifact
from .sat import CnfInstance, EmptyClause, LiteralOutOfRange


class ParseError(ValueError):
    """Malformed input text; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateItem(ParseError):
    """An item name is declared twice in a want-list."""


class UnknownWantedItem(ParseError):
    """A want-list entry wants an item that is never declared."""


class BadParameters(ValueError):
    """Invalid random-instance parameters."""


def _records(text: str):
    """Non-empty, comment-stripped (line_number, tokens) pairs."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _check_token(token: str, what: str) -> str:
    if not token or any(ch.isspace() for ch in token) or token.startswith("#"):
        raise ValueError(f"invalid {what}: {token!r}")
    return token


# ---------------------------------------------------------------------------
# graph files


def serialize_graph(g: ColoredDigraph, names: tuple[str, ...] | None = None) -> str:
    """Graph text form; vertex names default to stringified indices."""
    if names is None:
        names = tuple(str(v) for v in range(g.vertex_count))
    lines = []
    for v in range(g.vertex_count):
        name = _check_token(names[v], "vertex name")
        label = _check_token(g.color_label(g.vertex_colors[v]), "color label")
        lines.append(f"V {name} {label}")
    for u, v in g.edges:
        lines.append(f"E {names[u]} {names[v]}")
    return "\n".join(lines) + ("\n" if lines else "")


def parse_graph(text: str) -> tuple[ColoredDigraph, tuple[str, ...]]:
    """Parse the graph text form.

    Vertex ids are assigned densely in declaration order and color ids in
    order of first label appearance, so serializing the result reproduces
    the input.  Returns the graph and the vertex names.
    """
    names: list[str] = []
    index: dict[str, int] = {}
    colors: list[int] = []
    labels: list[str] = []
    label_id: dict[str, int] = {}
    raw_edges: list[tuple[int, str, str]] = []

    for lineno, tokens in _records(text):
        kind = tokens[0]
        if kind == "V":
            if len(tokens) != 3:
                raise ParseError("V record needs <vertex-id> <color-label>", lineno)
            name, label = tokens[1], tokens[2]
            if name in index:
                raise ParseError(f"duplicate vertex {name!r}", lineno)
            index[name] = len(names)
            names.append(name)
            if label not in label_id:
                label_id[label] = len(labels)
                labels.append(label)
            colors.append(label_id[label])
        elif kind == "E":
            if len(tokens) != 3:
                raise ParseError("E record needs <from-id> <to-id>", lineno)
            raw_edges.append((lineno, tokens[1], tokens[2]))
        else:
            raise ParseError(f"unknown record type {kind!r}", lineno)

    edges = []
    for lineno, a, b in raw_edges:
        if a not in index:
            raise ParseError(f"edge endpoint {a!r} is not a declared vertex", lineno)
        if b not in index:
            raise ParseError(f"edge endpoint {b!r} is not a declared vertex", lineno)
        edges.append((index[a], index[b]))

    return build_graph(colors, edges, labels if labels else None), tuple(names)


# ---------------------------------------------------------------------------
# solution files


def serialize_solution(
    g: ColoredDigraph, s: CycleSet, names: tuple[str, ...] | None = None
) -> str:
    """Canonical solution text form (cycles rotated and sorted)."""
    if names is None:
        names = tuple(str(v) for v in range(g.vertex_count))
    lines = []
    for cycle in canonical_cycle_set(g, s).cycles:
        lines.append("C " + " ".join(names[v] for v in cycle_vertices(g, cycle)))
    return "\n".join(lines) + ("\n" if lines else "")


def parse_solution(
    text: str, g: ColoredDigraph, names: tuple[str, ...] | None = None
) -> CycleSet:
    """Parse ``C v1 v2 ... vk`` records against a graph.

    Unknown vertex names and missing edges are parse errors; validity of the
    resulting set (disjointness etc.) is the caller's concern.
    """
    if names is None:
        names = tuple(str(v) for v in range(g.vertex_count))
    index = {name: v for v, name in enumerate(names)}
    cycles = []
    for lineno, tokens in _records(text):
        if tokens[0] != "C":
            raise ParseError(f"unknown record type {tokens[0]!r}", lineno)
        if len(tokens) < 2:
            raise ParseError("C record needs at least one vertex", lineno)
        vertices = []
        for token in tokens[1:]:
            if token not in index:
                raise ParseError(f"unknown vertex {token!r}", lineno)
            vertices.append(index[token])
        try:
            cycles.append(cycle_from_vertices(g, vertices))
        except NonexistentEdge as exc:
            raise ParseError(str(exc), lineno) from exc
    return CycleSet(tuple(cycles))


# ---------------------------------------------------------------------------
# want-lists


def parse_wantlist(text: str) -> tuple[ColoredDigraph, tuple[str, ...]]:
    """Parse ``<agent> <item> : <item>*`` lines into a colored digraph.

    One vertex per item, colored by its agent (color labels are the agent
    names); one edge item -> w per entry of its wants list, duplicates kept
    as parallel edges.  Wanted items may be declared on any line of the
    file.  Returns the graph and the item names.
    """
    entries: list[tuple[int, str, str, list[str]]] = []
    index: dict[str, int] = {}
    for lineno, tokens in _records(text):
        if len(tokens) < 3 or tokens[2] != ":":
            raise ParseError("expected '<agent> <item> : <item>*'", lineno)
        agent, item, wants = tokens[0], tokens[1], tokens[3:]
        if item in index:
            raise DuplicateItem(f"item {item!r} already declared", lineno)
        index[item] = len(entries)
        entries.append((lineno, agent, item, wants))

    agent_ids: dict[str, int] = {}
    agents: list[str] = []
    colors = []
    names = []
    for _, agent, item, _ in entries:
        if agent not in agent_ids:
            agent_ids[agent] = len(agents)
            agents.append(agent)
        colors.append(agent_ids[agent])
        names.append(item)

    edges = []
    for lineno, _, item, wants in entries:
        for want in wants:
            if want not in index:
                raise UnknownWantedItem(f"{item!r} wants undeclared item {want!r}", lineno)
            edges.append((index[item], index[want]))

    return build_graph(colors, edges, agents if agents else None), tuple(names)


def serialize_wantlist(g: ColoredDigraph, names: tuple[str, ...]) -> str:
    """Want-list text form; agents are the graph's color labels."""
    wants: list[list[str]] = [[] for _ in range(g.vertex_count)]
    for u, v in g.edges:
        wants[u].append(names[v])
    lines = []
    for v in range(g.vertex_count):
        agent = _check_token(g.color_label(g.vertex_colors[v]), "agent name")
        item = _check_token(names[v], "item name")
        lines.append(f"{agent} {item} : " + " ".join(wants[v]) if wants[v] else f"{agent} {item} :")
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# DIMACS CNF


def parse_dimacs(text: str) -> CnfInstance:
    """Parse standard DIMACS CNF (``p cnf <vars> <clauses>`` header,
    zero-terminated clauses, ``c`` comment lines)."""
    num_vars: int | None = None
    num_clauses: int | None = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []

    for lineno, tokens in _records(text):
        if tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if num_vars is not None:
                raise ParseError("duplicate 'p cnf' header", lineno)
            if len(tokens) != 4 or tokens[1] != "cnf":
                raise ParseError("expected 'p cnf <vars> <clauses>'", lineno)
            try:
                num_vars, num_clauses = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise ParseError("non-integer header counts", lineno) from None
            if num_vars < 0 or num_clauses < 0:
                raise ParseError("negative header counts", lineno)
            continue
        if num_vars is None:
            raise ParseError("clause before 'p cnf' header", lineno)
        for token in tokens:
            try:
                lit = int(token)
            except ValueError:
                raise ParseError(f"not a literal: {token!r}", lineno) from None
            if lit == 0:
                if not current:
                    raise EmptyClause(f"line {lineno}: empty clause")
                clauses.append(tuple(current))
                current = []
            else:
                if abs(lit) > num_vars:
                    raise LiteralOutOfRange(
                        f"line {lineno}: literal {lit} exceeds {num_vars} variables"
                    )
                current.append(lit)

    if num_vars is None:
        raise ParseError("missing 'p cnf' header")
    if current:
        raise ParseError("last clause is not zero-terminated")
    if len(clauses) != num_clauses:
        raise ParseError(
            f"header declares {num_clauses} clauses, found {len(clauses)}"
        )
    return CnfInstance(num_vars, tuple(clauses))


# ---------------------------------------------------------------------------
# random instances


def gen_random(
    num_vertices: int, num_colors: int, edge_prob: float, seed: int
) -> ColoredDigraph:
    """Seeded random market: every color gets at least one vertex (the first
    ``num_colors`` vertices carry colors 0..K-1, the rest draw uniformly),
    and each ordered pair (u, v), u != v, gets an edge independently with
    probability ``edge_prob``.  Deterministic given identical parameters."""
    if num_vertices < 0 or num_colors < 0 or num_colors > num_vertices:
        raise BadParameters(f"need 0 <= colors <= vertices, got {num_colors}/{num_vertices}")
    if num_vertices > 0 and num_colors == 0:
        raise BadParameters("vertices need colors")
    if not 0.0 <= edge_prob <= 1.0:
        raise BadParameters(f"edge probability {edge_prob} outside [0, 1]")
    rng = random.Random(seed)
    colors = [v if v < num_colors else rng.randrange(num_colors) for v in range(num_vertices)]
    edges = [
        (u, v)
        for u in range(num_vertices)
        for v in range(num_vertices)
        if u != v and rng.random() < edge_prob
    ]
    labels = [f"c{c}" for c in range(num_colors)]
    return build_graph(colors, edges, labels if labels else None)


# ---------------------------------------------------------------------------
# gadget map files (reduction sidecar)


@dataclass(frozen=True, eq=True)
class GadgetMap:
    """Parsed reduction sidecar: enough to pull a solution file back to an
    assignment and score it, without reloading the gadget graph."""

    num_vars: int
    true_loops: dict[int, tuple[str, ...]]
    false_loops: dict[int, tuple[str, ...]]
    clause_color_labels: dict[int, str]
    balance_color_labels: tuple[str, ...]
    clauses: tuple[tuple[int, ...], ...] = field(default=())

    def cnf(self) -> CnfInstance:
        return CnfInstance(self.num_vars, self.clauses)


def serialize_gadget_map(
    art: ReductionArtifact, names: tuple[str, ...] | None = None
) -> str:
    """Sidecar map for a gadget graph emitted with the same vertex names.

    ``VAR i TRUE|FALSE <vertices>`` lists each loop in cycle order;
    ``CLAUSECOLOR j <label>`` and ``BALANCECOLOR <labels>`` name the special
    colors; ``CLAUSE j <literals>`` repeats the source clauses so the
    pullback can count satisfied clauses.
    """
    g = art.graph
    if names is None:
        names = tuple(str(v) for v in range(g.vertex_count))
    lines = []
    for i in range(1, art.cnf.num_vars + 1):
        for tag, loop in (("TRUE", art.true_loops[i - 1]), ("FALSE", art.false_loops[i - 1])):
            loop_names = " ".join(names[v] for v in cycle_vertices(g, loop))
            lines.append(f"VAR {i} {tag} {loop_names}")
    for j, color in enumerate(art.clause_colors, start=1):
        lines.append(f"CLAUSECOLOR {j} {g.color_label(color)}")
    if art.balance_colors:
        ordered = sorted(art.balance_colors)
        lines.append("BALANCECOLOR " + " ".join(g.color_label(c) for c in ordered))
    for j, clause in enumerate(art.cnf.clauses, start=1):
        lines.append(f"CLAUSE {j} " + " ".join(str(lit) for lit in clause))
    return "\n".join(lines) + ("\n" if lines else "")


def parse_gadget_map(text: str) -> GadgetMap:
    true_loops: dict[int, tuple[str, ...]] = {}
    false_loops: dict[int, tuple[str, ...]] = {}
    clause_color_labels: dict[int, str] = {}
    balance_color_labels: tuple[str, ...] = ()
    clauses: dict[int, tuple[int, ...]] = {}

    for lineno, tokens in _records(text):
        kind = tokens[0]
        if kind == "VAR":
            if len(tokens) < 4 or tokens[2] not in ("TRUE", "FALSE"):
                raise ParseError("expected 'VAR <i> TRUE|FALSE <vertices>'", lineno)
            var = _parse_int(tokens[1], lineno)
            target = true_loops if tokens[2] == "TRUE" else false_loops
            if var in target:
                raise ParseError(f"duplicate {tokens[2]} loop for variable {var}", lineno)
            target[var] = tuple(tokens[3:])
        elif kind == "CLAUSECOLOR":
            if len(tokens) != 3:
                raise ParseError("expected 'CLAUSECOLOR <j> <label>'", lineno)
            clause_color_labels[_parse_int(tokens[1], lineno)] = tokens[2]
        elif kind == "BALANCECOLOR":
            balance_color_labels = tuple(tokens[1:])
        elif kind == "CLAUSE":
            if len(tokens) < 3:
                raise ParseError("expected 'CLAUSE <j> <literals>'", lineno)
            clauses[_parse_int(tokens[1], lineno)] = tuple(
                _parse_int(t, lineno) for t in tokens[2:]
            )
        else:
            raise ParseError(f"unknown record type {kind!r}", lineno)

    num_vars = max(true_loops, default=0)
    if set(true_loops) != set(false_loops) or set(true_loops) != set(range(1, num_vars + 1)):
        raise ParseError("incomplete VAR loop records")
    ordered_clauses = tuple(clauses[j] for j in sorted(clauses))
    if set(clauses) != set(range(1, len(clauses) + 1)):
        raise ParseError("non-contiguous CLAUSE records")
    return GadgetMap(
        num_vars=num_vars,
        true_loops=true_loops,
        false_loops=false_loops,
        clause_color_labels=clause_color_labels,
        balance_color_labels=balance_color_labels,
        clauses=ordered_clauses,
    )


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None


# ---------------------------------------------------------------------------
# run reports


@dataclass(frozen=True)
class RunReport:
    """Summary of one clearing run; metrics always match a re-validation of
    the emitted solution."""

    objective: str
    method: str
    vertex_count: int
    color_count: int
    total_colors: int
    traded_agents: int
    nodes: int
    seconds: float
    guarantee: str = ""
    cycles: tuple[tuple[str, ...], ...] = ()


def serialize_report(report: RunReport) -> str:
    lines = [
        f"objective {report.objective}",
        f"method {report.method}",
        f"vertices {report.vertex_count}",
        f"colors {report.color_count}",
        f"total-colors {report.total_colors}",
        f"traded-agents {report.traded_agents}",
        f"nodes {report.nodes}",
        f"seconds {report.seconds!r}",
    ]
    if report.guarantee:
        lines.append(f"guarantee {report.guarantee}")
    for cycle in report.cycles:
        lines.append("C " + " ".join(cycle))
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> RunReport:
    fields: dict[str, str] = {}
    cycles: list[tuple[str, ...]] = []
    for lineno, tokens in _records(text):
        if tokens[0] == "C":
            cycles.append(tuple(tokens[1:]))
            continue
        if len(tokens) != 2:
            raise ParseError("expected '<key> <value>'", lineno)
        fields[tokens[0]] = tokens[1]
    try:
        return RunReport(
            objective=fields["objective"],
            method=fields["method"],
            vertex_count=int(fields["vertices"]),
            color_count=int(fields["colors"]),
            total_colors=int(fields["total-colors"]),
            traded_agents=int(fields["traded-agents"]),
            nodes=int(fields["nodes"]),
            seconds=float(fields["seconds"]),
            guarantee=fields.get("guarantee", ""),
            cycles=tuple(cycles),
        )
    except KeyError as exc:
        raise ParseError(f"missing report field {exc.args[0]!r}") from None
