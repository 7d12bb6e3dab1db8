import networkx as nx
import pytest

from src.exceptions import GraphError
from src.graph.generators import (
    balanced_tree,
    barbell,
    erdos_renyi,
    generate,
    preferential_attachment,
    star,
)
from tests.helpers import to_networkx


def test_star_center_is_zero():
    g = star(6)
    assert g.degree(0) == 5
    assert all(g.degree(v) == 1 for v in range(1, 6))


def test_balanced_tree_size():
    g = balanced_tree(2, 3)
    assert g.node_count == 15
    assert g.edge_count == 14
    assert nx.is_tree(to_networkx(g))


@pytest.mark.parametrize("n, m", [(50, 1), (200, 3), (500, 8)])
def test_preferential_attachment_shape(n, m):
    g = preferential_attachment(n, m, 1)
    assert g.node_count == n
    assert g.edge_count == m * (m + 1) // 2 + (n - m - 1) * m
    assert min(g.degrees()) >= m
    assert g.is_connected()


def test_preferential_attachment_has_hubs():
    g = preferential_attachment(2000, 3, 42)
    reference = nx.barabasi_albert_graph(2000, 3, seed=42)
    ours = max(g.degrees())
    theirs = max(d for _, d in reference.degree())
    # Хвосты распределений степеней одного порядка
    assert ours > 10 * 3
    assert theirs / 4 < ours < theirs * 4


def test_preferential_attachment_deterministic():
    assert list(preferential_attachment(300, 2, 5).edges()) == list(preferential_attachment(300, 2, 5).edges())


def test_preferential_attachment_bad_params():
    with pytest.raises(GraphError):
        preferential_attachment(3, 3)
    with pytest.raises(GraphError):
        preferential_attachment(10, 0)


def test_erdos_renyi_connected_by_default():
    for seed in range(10):
        assert erdos_renyi(30, 0.2, seed).is_connected()


def test_erdos_renyi_falls_back_to_giant_component():
    g = erdos_renyi(50, 0.01, 3, max_tries=2)
    assert g.is_connected()
    assert g.node_count < 50


def test_generate_by_name():
    assert generate("barbell", (3, 4)).node_count == 7
    assert generate("path", {"n": 4}).edge_count == 3
    assert generate("erdos_renyi", (20, 0.3), 1).is_connected()


def test_generate_errors():
    with pytest.raises(GraphError):
        generate("lattice", (3,))
    with pytest.raises(GraphError):
        generate("barbell", (3,))
    with pytest.raises(GraphError):
        barbell(0, 3)
