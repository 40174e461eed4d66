import networkx as nx
import pytest

from clique_extremal import (
    FormatError,
    load_graph,
    random_graph,
    read_edge_list,
    read_graph6,
    save_graph,
    write_edge_list,
    write_graph6,
)

from conftest import complete_graph


def test_edge_list_round_trip():
    for seed in range(10):
        g = random_graph(11, 0.5, seed)
        assert read_edge_list(write_edge_list(g)) == g


def test_edge_list_comments_and_blanks_ignored():
    text = "# a comment\n3 2\n\n0 1\n# another\n1 2\n"
    g = read_edge_list(text)
    assert g.num_edges == 2


def test_edge_list_errors():
    with pytest.raises(FormatError):
        read_edge_list("")
    with pytest.raises(FormatError):
        read_edge_list("3\n")
    with pytest.raises(FormatError):
        read_edge_list("3 2\n0 1\n")  # announces 2 edges, gives 1
    with pytest.raises(FormatError):
        read_edge_list("2 1\n0 0\n")  # self-loop
    with pytest.raises(FormatError):
        read_edge_list("2 1\n0 5\n")  # out of range
    with pytest.raises(FormatError):
        read_edge_list("2 1\n0 x\n")


def test_graph6_known_value():
    assert write_graph6(complete_graph(4)) == "C~"
    assert read_graph6("C~") == complete_graph(4)


def test_graph6_header_accepted():
    assert read_graph6(">>graph6<<C~") == complete_graph(4)


def test_graph6_round_trip_byte_exact():
    for seed in range(40):
        n = seed % 23 + 1
        g = random_graph(n, (seed % 10) / 10.0, seed)
        encoded = write_graph6(g)
        assert read_graph6(encoded) == g
        assert write_graph6(read_graph6(encoded)) == encoded


def test_graph6_three_byte_size_prefix():
    g = random_graph(80, 0.05, 3)
    encoded = write_graph6(g)
    assert encoded.startswith("~")
    assert read_graph6(encoded) == g


def test_graph6_matches_networkx():
    for seed in range(25):
        n = seed % 35 + 1
        g = random_graph(n, 0.4, seed)
        nxg = nx.Graph()
        nxg.add_nodes_from(range(n))
        nxg.add_edges_from(g.edges())
        theirs = nx.to_graph6_bytes(nxg, header=False).decode().strip()
        assert write_graph6(g) == theirs
        assert read_graph6(theirs) == g


def test_graph6_errors():
    with pytest.raises(FormatError):
        read_graph6("")
    with pytest.raises(FormatError):
        read_graph6("C~~")  # trailing junk
    with pytest.raises(FormatError):
        read_graph6("C")  # truncated body
    with pytest.raises(FormatError):
        read_graph6("C\x1c~")  # character below the offset


def test_file_round_trip(tmp_path):
    g = random_graph(9, 0.6, 1)
    for fmt in ("edgelist", "graph6"):
        path = str(tmp_path / f"g.{fmt}")
        save_graph(g, path, fmt)
        assert load_graph(path, fmt) == g
