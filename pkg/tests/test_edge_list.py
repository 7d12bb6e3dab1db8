import io

import pytest

from src.exceptions import DataError, GraphFormatError
from src.graph.generators import barbell
from src.parser.edge_list import load_edge_list, parse_edge_list, serialize_edge_list


def test_ids_by_first_appearance():
    g = parse_edge_list(io.StringIO("# comment\nb a\n% other comment\n\na c\n"))
    assert g.labels == ("b", "a", "c")
    assert g.edge_count == 2
    assert g.has_edge(0, 1)
    assert g.has_edge(1, 2)


def test_loops_and_duplicates_dropped():
    g = parse_edge_list(io.StringIO("1 2\n2 1\n3 3\n2 3\n"))
    assert g.node_count == 3
    assert g.edge_count == 2


def test_bad_line_reports_number():
    with pytest.raises(GraphFormatError) as info:
        parse_edge_list(io.StringIO("1 2\n1 2 3\n"))
    assert info.value.line_number == 2
    assert "line 2" in str(info.value)


def test_empty_input():
    with pytest.raises(GraphFormatError):
        parse_edge_list(io.StringIO("# only a comment\n"))


def test_serialize_then_parse_keeps_structure():
    g = barbell(4, 3)
    buffer = io.StringIO()
    serialize_edge_list(g, buffer)
    parsed = parse_edge_list(io.StringIO(buffer.getvalue()))
    assert parsed.node_count == g.node_count
    assert parsed.edge_count == g.edge_count
    for u, v in g.edges():
        assert parsed.has_edge(parsed.label_map[g.label(u)], parsed.label_map[g.label(v)])


def test_load_edge_list(tmp_path):
    path = tmp_path / "g.edges"
    path.write_text("x y\ny z\n", encoding="utf-8")
    g = load_edge_list(str(path))
    assert g.labels == ("x", "y", "z")


def test_load_missing_file(tmp_path):
    with pytest.raises(DataError):
        load_edge_list(str(tmp_path / "missing.edges"))
