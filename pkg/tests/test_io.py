"""File formats and JSON round-trips."""

from fractions import Fraction

import pytest

from kcutgame import io as kio
from kcutgame.corpora import cycle_graph, derive_rng, random_weighted_graph
from kcutgame.deviation import JointMove, make_witness
from kcutgame.dynamics import Policy, run
from kcutgame.game import GameSpec
from kcutgame.graphs import Graph


def test_rational_round_trip():
    for value in (Fraction(3), Fraction(1, 2), Fraction(-7, 3), Fraction(100)):
        assert kio.parse_rational(kio.format_rational(value)) == value
    with pytest.raises(ValueError):
        kio.parse_rational("1.5")
    with pytest.raises(ValueError):
        kio.parse_rational("1/0")


def test_graph_file_round_trip():
    g = Graph(4, [(0, 1), (1, 2, Fraction(1, 2)), (2, 3, 100)])
    text = kio.write_graph(g, 3)
    parsed, k = kio.parse_graph(text)
    assert parsed == g and k == 3
    assert "edge 1 2 1/2" in text


def test_graph_parse_errors_carry_line_numbers():
    with pytest.raises(kio.ParseError) as err:
        kio.parse_graph("kcut 3 2\nedge 0 1\nedge 0 zzz\n")
    assert "line 3" in str(err.value)
    with pytest.raises(kio.ParseError):
        kio.parse_graph("nonsense 3 2\n")
    with pytest.raises(kio.ParseError):
        kio.parse_graph("# only a comment\n")
    with pytest.raises(kio.ParseError):
        kio.parse_graph("kcut 2 2\nedge 0 5\n")


def test_graph_file_comments_and_defaults():
    text = "# weighted triangle\nkcut 3 2\nedge 0 1  # unit\nedge 1 2 5\n"
    g, k = kio.parse_graph(text)
    assert g.weight(0, 1) == 1
    assert g.weight(1, 2) == 5


def test_coloring_round_trip_and_errors():
    sigma = (1, 2, 2)
    assert kio.parse_coloring(kio.write_coloring(sigma), 3) == sigma
    with pytest.raises(kio.ParseError):
        kio.parse_coloring("color 0 1\n", 2)
    with pytest.raises(kio.ParseError):
        kio.parse_coloring("color 0 1\ncolor 0 2\ncolor 1 1\n", 2)
    with pytest.raises(kio.ParseError):
        kio.parse_coloring("color 5 1\n", 2)


def test_witness_json_round_trip_revalidates():
    spec = GameSpec(cycle_graph(4), 2)
    sigma = (1, 1, 2, 2)
    witness = make_witness(spec, sigma, JointMove((0, 3), (2, 1)))
    data = kio.witness_to_dict(witness)
    back = kio.witness_from_dict(data)
    assert back == witness
    assert back.revalidate(spec, sigma)


def test_spec_json_round_trip():
    rng = derive_rng(1, 1)
    graph = random_weighted_graph(5, rng)
    spec = GameSpec(graph, 3)
    back = kio.spec_from_dict(kio.spec_to_dict(spec))
    assert back.graph == graph and back.k == 3


def test_trace_round_trips_and_log_shape():
    spec = GameSpec(cycle_graph(4), 2)
    trace = run(
        spec, (1, 1, 1, 1), Policy(mode="unilateral-best-response"), max_steps=10
    )
    back = kio.trace_from_dict(kio.trace_to_dict(trace))
    assert back == trace
    lines = kio.trace_to_log_lines(trace)
    assert lines[0].startswith("state 0 |")
    assert lines[-1].startswith("status converged")
    assert sum(1 for line in lines if line.startswith("move")) == trace.step_count
