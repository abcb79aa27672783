import pytest
from hypothesis import given

from drdsr.core import DrdsInstance, Move, ReconfSequence, Rule
from drdsr.errors import InvalidInstance, ParseError
from drdsr.formats import (
    format_drds_instance,
    format_instance,
    format_moves,
    parse_instance,
    parse_moves,
)
from drdsr.reductions import gen_extremal_tj_split, gen_extremal_ts_split
from test_graph import graphs

P5 = """# a path
p 5 4
0 1
1 2
2 3
3 4
r 2
rule ts
S 1 2
T 2 1 3
"""


def test_full_instance_round_trip():
    f = parse_instance(P5)
    assert f.r == 2 and f.rule is Rule.TS
    assert f.source == {2} and f.target == {1, 3}
    inst = DrdsInstance(f.graph, 2, "TJ", {2}, {2})
    again = parse_instance(format_drds_instance(inst, ["note"])).to_instance()
    assert again == inst


def test_override_radius_and_rule():
    inst = parse_instance(P5.replace("T 2 1 3", "T 1 2")).to_instance(r=3, rule="TJ")
    assert inst.r == 3 and inst.rule is Rule.TJ


def test_missing_fields_are_reported():
    with pytest.raises(InvalidInstance, match="S, T"):
        parse_instance("p 2 1\n0 1\nr 1\nrule TJ").to_instance()


def test_size_mismatch_still_parses():
    f = parse_instance(P5)
    assert len(f.source) != len(f.target)


@pytest.mark.parametrize("text, line", [
    (P5.replace("S 1 2", "S 2 2"), 9),
    (P5.replace("S 1 2", "S 1 7"), 9),
    (P5.replace("T 2 1 3", "T 2 3 3"), 10),
    (P5.replace("rule ts", "rule xx"), 8),
    (P5.replace("r 2", "r 0"), 7),
    (P5 + "S 1 2\n", 11),
    (P5.replace("r 2", "p 5 4"), 7),
    ("", 1),
])
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as err:
        parse_instance(text)
    assert err.value.line == line


def test_clique_line_is_validated():
    with pytest.raises(ParseError):
        parse_instance("p 4 3\n0 1\n1 2\n2 3\nK 2 0 1")
    f = parse_instance("p 3 2\n0 1\n1 2\nK 1 1")
    assert f.clique == {1}


def test_generated_instances_round_trip():
    for out in (gen_extremal_ts_split(3), gen_extremal_tj_split(3)):
        text = format_drds_instance(out.instance)
        assert parse_instance(text).to_instance() == out.instance
        assert format_drds_instance(parse_instance(text).to_instance()) == text


@given(graphs())
def test_graph_round_trip(g):
    assert parse_instance(format_instance(g)).graph == g


def test_moves_round_trip():
    seq = ReconfSequence({0}, (Move(0, 1), Move(1, 2)))
    text = format_moves(seq)
    assert text == "mv 0 1\nmv 1 2\n"
    assert parse_moves(text) == list(seq.moves)


def test_moves_accept_solver_header():
    assert parse_moves("YES 1\nmv 3 4\n") == [Move(3, 4)]
    with pytest.raises(ParseError):
        parse_moves("YES 2\nmv 3 4\n")


@pytest.mark.parametrize("text", ["mv 1", "move 1 2", "mv 1 1", "mv a b"])
def test_bad_move_lines(text):
    with pytest.raises(ParseError):
        parse_moves(text)
