"""File formats and the JSON report schema.

Graph files are line-oriented text: a header ``kcut <n> <k>`` followed by
``edge <u> <v> [<w>]`` lines, weight as an integer or ``p/q`` rational
(default 1); ``#`` starts a comment.  Coloring files are ``color <u> <c>``
lines.  Both are trivially diffable and round-trip exact rationals.

JSON reports are self-contained: a witness embeds the full graph, so a
report can be re-validated from the file alone.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, TextIO

from .deviation import DeviationWitness, JointMove
from .dynamics import DynamicsTrace
from .game import ColorAssignment, GameSpec, validate_coloring
from .graphs import Graph


class ParseError(ValueError):
    """Malformed input file; message carries the 1-based line number."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_rational(text: str) -> Fraction:
    try:
        if "/" in text:
            num, den = text.split("/", 1)
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational {text!r}: {exc}") from None


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _content_lines(text: str):
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line_no, line.split()


def parse_graph(text: str) -> tuple[Graph, int]:
    """Parse a graph file, returning the graph and its color count k."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int, Fraction]] = []
    for line_no, fields in _content_lines(text):
        if header is None:
            if fields[0] != "kcut" or len(fields) != 3:
                raise ParseError(line_no, "expected header 'kcut <n> <k>'")
            try:
                header = (int(fields[1]), int(fields[2]))
            except ValueError:
                raise ParseError(line_no, "header n and k must be integers") from None
            if header[0] < 0 or header[1] < 2:
                raise ParseError(line_no, "need n >= 0 and k >= 2")
            continue
        if fields[0] != "edge" or len(fields) not in (3, 4):
            raise ParseError(line_no, "expected 'edge <u> <v> [<w>]'")
        try:
            u, v = int(fields[1]), int(fields[2])
            w = parse_rational(fields[3]) if len(fields) == 4 else Fraction(1)
        except ValueError as exc:
            raise ParseError(line_no, str(exc)) from None
        edges.append((u, v, w))
    if header is None:
        raise ParseError(1, "missing 'kcut <n> <k>' header")
    try:
        return Graph(header[0], edges), header[1]
    except ValueError as exc:
        raise ParseError(1, f"invalid graph: {exc}") from None


def write_graph(graph: Graph, k: int) -> str:
    lines = [f"kcut {graph.node_count} {k}"]
    for u, v, w in graph.edges():
        if w == 1:
            lines.append(f"edge {u} {v}")
        else:
            lines.append(f"edge {u} {v} {format_rational(w)}")
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, n: int) -> ColorAssignment:
    colors: dict[int, int] = {}
    for line_no, fields in _content_lines(text):
        if fields[0] != "color" or len(fields) != 3:
            raise ParseError(line_no, "expected 'color <u> <c>'")
        try:
            u, c = int(fields[1]), int(fields[2])
        except ValueError:
            raise ParseError(line_no, "node and color must be integers") from None
        if not 0 <= u < n:
            raise ParseError(line_no, f"node {u} out of range for {n} nodes")
        if u in colors:
            raise ParseError(line_no, f"node {u} colored twice")
        colors[u] = c
    missing = [u for u in range(n) if u not in colors]
    if missing:
        raise ParseError(1, f"nodes without a color: {missing}")
    return tuple(colors[u] for u in range(n))


def write_coloring(sigma: ColorAssignment) -> str:
    return "\n".join(f"color {u} {c}" for u, c in enumerate(sigma)) + "\n"


# -- JSON schema -------------------------------------------------------------


def graph_to_dict(graph: Graph, k: int) -> dict[str, Any]:
    return {
        "n": graph.node_count,
        "k": k,
        "edges": [[u, v, format_rational(w)] for u, v, w in graph.edges()],
    }


def graph_from_dict(data: dict[str, Any]) -> tuple[Graph, int]:
    edges = [(u, v, parse_rational(w)) for u, v, w in data["edges"]]
    return Graph(data["n"], edges), int(data["k"])


def spec_to_dict(spec: GameSpec) -> dict[str, Any]:
    return graph_to_dict(spec.graph, spec.k)


def spec_from_dict(data: dict[str, Any]) -> GameSpec:
    graph, k = graph_from_dict(data)
    return GameSpec(graph, k)


def move_to_dict(move: JointMove) -> dict[str, Any]:
    return {"coalition": list(move.coalition), "new_colors": list(move.new_colors)}


def move_from_dict(data: dict[str, Any]) -> JointMove:
    return JointMove(tuple(data["coalition"]), tuple(data["new_colors"]))


def witness_to_dict(witness: DeviationWitness) -> dict[str, Any]:
    return {
        "move": move_to_dict(witness.move),
        "utilities_before": [format_rational(x) for x in witness.utilities_before],
        "utilities_after": [format_rational(x) for x in witness.utilities_after],
        "cut_before": format_rational(witness.cut_before),
        "cut_after": format_rational(witness.cut_after),
    }


def witness_from_dict(data: dict[str, Any]) -> DeviationWitness:
    return DeviationWitness(
        move=move_from_dict(data["move"]),
        utilities_before=tuple(parse_rational(x) for x in data["utilities_before"]),
        utilities_after=tuple(parse_rational(x) for x in data["utilities_after"]),
        cut_before=parse_rational(data["cut_before"]),
        cut_after=parse_rational(data["cut_after"]),
    )


def trace_to_dict(trace: DynamicsTrace) -> dict[str, Any]:
    return {
        "states": [list(s) for s in trace.states],
        "moves": [move_to_dict(m) for m in trace.moves],
        "cut_values": [format_rational(c) for c in trace.cut_values],
        "status": trace.status,
        "converged_concept": trace.converged_concept,
        "first_repeat_index": trace.first_repeat_index,
        "potential_decreases": list(trace.potential_decreases),
    }


def trace_from_dict(data: dict[str, Any]) -> DynamicsTrace:
    return DynamicsTrace(
        states=tuple(tuple(s) for s in data["states"]),
        moves=tuple(move_from_dict(m) for m in data["moves"]),
        cut_values=tuple(parse_rational(c) for c in data["cut_values"]),
        status=data["status"],
        converged_concept=data.get("converged_concept"),
        first_repeat_index=data.get("first_repeat_index"),
        potential_decreases=tuple(data.get("potential_decreases", ())),
    )


def trace_to_log_lines(trace: DynamicsTrace) -> list[str]:
    """Line-oriented trace log: one state line per step, pipe-delimited."""
    lines = [
        f"state 0 | cut {format_rational(trace.cut_values[0])} | "
        f"coloring {' '.join(map(str, trace.states[0]))}"
    ]
    for i, move in enumerate(trace.moves):
        lines.append(
            f"move {i} | coalition {' '.join(map(str, move.coalition))} | "
            f"colors {' '.join(map(str, move.new_colors))}"
        )
        lines.append(
            f"state {i + 1} | cut {format_rational(trace.cut_values[i + 1])} | "
            f"coloring {' '.join(map(str, trace.states[i + 1]))}"
        )
    tail = f"status {trace.status}"
    if trace.status == "converged":
        tail += f" {trace.converged_concept}"
    if trace.status == "cycle":
        tail += f" first_repeat_index={trace.first_repeat_index}"
    lines.append(tail)
    return lines


def dump_report(report: dict[str, Any], stream: TextIO) -> None:
    json.dump(report, stream, indent=2, sort_keys=False)
    stream.write("\n")


def load_coloring_file(path: str, spec: GameSpec) -> ColorAssignment:
    with open(path, "r", encoding="utf-8") as fh:
        sigma = parse_coloring(fh.read(), spec.n)
    return validate_coloring(spec, sigma)


def load_graph_file(path: str) -> tuple[Graph, int]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())
