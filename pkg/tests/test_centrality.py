import itertools

import networkx as nx
import numpy as np
import pytest

from src.centrality.measures import (
    betweenness_approx,
    betweenness_scores,
    compute_scores,
    coreness_scores,
    degree_scores,
    eccentricity_scores,
)
from src.centrality.scores import Measure, ScoreTable, build_target_set, rank_nodes, target_size
from src.exceptions import CentralityError, GraphError
from src.graph.generators import barbell, clique, cycle, path, preferential_attachment, star
from src.graph.graph import Graph, bfs_distances
from tests.helpers import random_connected_graphs, to_networkx


def brute_coreness(g: Graph):
    """Ядерность перебором k с повторным удалением вершин степени < k"""
    core = [0] * g.node_count
    k = 1
    while True:
        alive = set(range(g.node_count))
        changed = True
        while changed:
            changed = False
            for v in list(alive):
                if sum(1 for w in g.neighbors(v) if w in alive) < k:
                    alive.remove(v)
                    changed = True
        if not alive:
            return core
        for v in alive:
            core[v] = k
        k += 1


def shortest_paths(g: Graph, s: int, t: int):
    dist = bfs_distances(g, s)
    paths = []

    def extend(prefix):
        v = prefix[-1]
        if v == t:
            paths.append(prefix)
            return
        for w in g.neighbors(v):
            if dist[w] == dist[v] + 1 and dist[w] <= dist[t]:
                extend(prefix + [w])

    extend([s])
    return paths


def brute_betweenness(g: Graph):
    """Перечисление всех кратчайших путей для каждой неупорядоченной пары"""
    result = [0.0] * g.node_count
    for s, t in itertools.combinations(range(g.node_count), 2):
        paths = shortest_paths(g, s, t)
        for p in paths:
            for v in p[1:-1]:
                result[v] += 1.0 / len(paths)
    return result


def all_pairs_eccentricity(g: Graph):
    n = g.node_count
    dist = np.full((n, n), np.inf)
    np.fill_diagonal(dist, 0)
    for u, v in g.edges():
        dist[u, v] = dist[v, u] = 1
    for k in range(n):
        dist = np.minimum(dist, dist[:, [k]] + dist[[k], :])
    return dist.max(axis=1).astype(int).tolist()


def test_oracle_equivalence_on_random_graphs():
    for g in random_connected_graphs(200, 12, seed=2024):
        assert coreness_scores(g).scores.tolist() == brute_coreness(g)
        np.testing.assert_allclose(betweenness_scores(g).scores, brute_betweenness(g), atol=1e-9)
        assert eccentricity_scores(g).scores.tolist() == all_pairs_eccentricity(g)


def test_betweenness_matches_networkx():
    g = preferential_attachment(150, 2, 3)
    expected = nx.betweenness_centrality(to_networkx(g), normalized=False)
    np.testing.assert_allclose(betweenness_scores(g).scores, [expected[v] for v in range(g.node_count)],
                               atol=1e-9)


def test_betweenness_known_values():
    assert betweenness_scores(cycle(4)).scores.tolist() == pytest.approx([0.5] * 4)
    assert betweenness_scores(path(5))[2] == pytest.approx(4.0)
    assert betweenness_scores(star(6))[0] == pytest.approx(10.0)


def test_betweenness_approx_with_all_pivots_is_exact():
    g = barbell(6, 4)
    np.testing.assert_allclose(betweenness_approx(g, g.node_count, 1).scores, betweenness_scores(g).scores)


def test_betweenness_approx_pivot_range():
    with pytest.raises(CentralityError):
        betweenness_approx(path(4), 0)
    with pytest.raises(CentralityError):
        betweenness_approx(path(4), 5)


def test_betweenness_approx_is_seeded():
    g = preferential_attachment(300, 3, 1)
    first = betweenness_approx(g, 40, 9).scores
    np.testing.assert_array_equal(first, betweenness_approx(g, 40, 9).scores)
    # Хабы остаются наверху и в оценке
    exact_top = set(rank_nodes(betweenness_scores(g))[:5].tolist())
    approx_top = set(rank_nodes(ScoreTable(Measure.BETWEENNESS, first))[:15].tolist())
    assert len(exact_top & approx_top) >= 3


def test_betweenness_approx_mean_is_close_for_top_nodes():
    g = preferential_attachment(500, 2, 42)
    exact = betweenness_scores(g)
    mean = np.mean([betweenness_approx(g, 100, seed).scores for seed in range(20)], axis=0)
    top = rank_nodes(exact)[:10]
    relative = np.abs(mean[top] - exact.scores[top]) / exact.scores[top]
    assert relative.max() < 0.15


def test_eccentricity_bounds():
    graphs = list(random_connected_graphs(100, 15, seed=31)) + [preferential_attachment(200, 1, 8), barbell(4, 6)]
    for g in graphs:
        ecc = eccentricity_scores(g).scores
        # радиус и диаметр
        assert ecc.max() <= 2 * ecc.min()
        for u, v in g.edges():
            assert abs(int(ecc[u]) - int(ecc[v])) <= 1


def test_coreness_never_exceeds_degree():
    graphs = list(random_connected_graphs(100, 15, seed=32)) + [preferential_attachment(300, 3, 2), star(8)]
    for g in graphs:
        assert (coreness_scores(g).scores <= degree_scores(g).scores).all()


def test_process_pool_gives_same_scores():
    g = preferential_attachment(60, 2, 4)
    np.testing.assert_allclose(betweenness_scores(g, workers=2).scores, betweenness_scores(g).scores)
    assert eccentricity_scores(g, workers=2).scores.tolist() == eccentricity_scores(g).scores.tolist()


def test_eccentricity_requires_connected_graph():
    with pytest.raises(GraphError):
        eccentricity_scores(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_degree_and_coreness_on_barbell():
    g = barbell(5, 5)
    assert degree_scores(g).scores.tolist() == [4, 4, 4, 4, 5, 5, 4, 4, 4, 4]
    assert coreness_scores(g).scores.tolist() == [4] * 10


def test_target_size():
    assert target_size(0.1, 51083) == 5109
    assert target_size(0.1, 30) == 3
    assert target_size(0.001, 10) == 1
    assert target_size(1.0, 7) == 7


def test_target_set_ties_by_id():
    table = ScoreTable(Measure.DEGREE, np.array([1, 3, 3, 2, 3]))
    target = build_target_set(table, 0.4)
    assert target.order == (1, 2)
    assert len(target) == 2
    assert 4 not in target


def test_eccentricity_targets_are_minimal():
    target = build_target_set(eccentricity_scores(star(10)), 0.1)
    assert target.members == frozenset({0})
    assert not target.maximize


def test_target_set_errors():
    table = degree_scores(clique(5))
    with pytest.raises(CentralityError):
        build_target_set(table, 0.0)
    with pytest.raises(CentralityError):
        build_target_set(table, 1.5)
    with pytest.raises(CentralityError):
        build_target_set(table, 0.5, graph_size=6)
    with pytest.raises(CentralityError):
        build_target_set(ScoreTable(Measure.DEGREE, np.array([], dtype=np.int64)), 0.5)


def test_score_table_frame_round_trip():
    g = barbell(3, 3)
    table = betweenness_scores(g)
    frame = table.to_frame(g.labels)
    assert list(frame.columns) == ["node_label", "measure", "score"]
    restored = ScoreTable.from_frame(frame.iloc[::-1], g.labels)
    np.testing.assert_allclose(restored.scores, table.scores)


def test_compute_scores_dispatch():
    g = cycle(6)
    for measure in Measure:
        assert compute_scores(g, measure).measure is measure
    assert Measure.parse(" Coreness ") is Measure.CORENESS
    with pytest.raises(CentralityError):
        Measure.parse("pagerank")
