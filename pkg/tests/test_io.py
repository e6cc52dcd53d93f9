import pytest
from hypothesis import given

from oracles import graphs
from p2p4color.graph import complete, empty
from p2p4color.io import (GraphFormatError, parse_dimacs, parse_json, read_graph, render_dimacs, render_json,
                          write_graph)


def test_dimacs_k2():
    assert parse_dimacs("p edge 2 1\ne 1 2\n") == complete(2)


def test_dimacs_isolated():
    assert parse_dimacs("c nothing here\np edge 3 0\n") == empty(3)


def test_dimacs_range_error_reports_line():
    with pytest.raises(GraphFormatError) as info:
        parse_dimacs("p edge 3 1\ne 1 5\n")
    assert info.value.line == 2


@pytest.mark.parametrize("text", ["e 1 2\n", "", "p edge x 1\n", "p edge 2 1\ne 1\n", "p edge 2 1\nq\n",
                                  "p edge 2 1\ne 1 1\n"])
def test_dimacs_malformed(text):
    with pytest.raises(GraphFormatError):
        parse_dimacs(text)


def test_dimacs_tolerates_duplicates():
    assert parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n").m == 1


@pytest.mark.parametrize("text", ["[]", "{\"n\": 2}", "{\"n\": 2, \"edges\": [[0, 2]]}", "{oops"])
def test_json_malformed(text):
    with pytest.raises(GraphFormatError):
        parse_json(text)


@given(graphs())
def test_roundtrips(g):
    assert parse_json(render_json(g)) == g
    assert parse_dimacs(render_dimacs(g, comment="x")) == g


def test_file_roundtrip(tmp_path):
    g = complete(4)
    for name in ("g.col", "g.json"):
        write_graph(g, tmp_path / name)
        assert read_graph(tmp_path / name) == g
