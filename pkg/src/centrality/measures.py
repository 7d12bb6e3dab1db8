"""Точные меры влияния вершин и приближённая посредническая центральность.

Посредническая центральность: неупорядоченные пары источник-приёмник считаются
один раз, концы пути не учитываются, нормировки нет.
"""
import logging
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from src.centrality.scores import Measure, ScoreTable
from src.exceptions import CentralityError, GraphError
from src.graph.generators import RandomState, make_rng
from src.graph.graph import Graph

logger = logging.getLogger(__name__)

Adjacency = Tuple[Tuple[int, ...], ...]

SCORE_DECIMALS = 9


def degree_scores(g: Graph) -> ScoreTable:
    return ScoreTable(Measure.DEGREE, np.array(g.degrees(), dtype=np.int64))


def coreness_scores(g: Graph) -> ScoreTable:
    """k-ядерность линейным алгоритмом с корзинами по степеням"""
    n = g.node_count
    adjacency = g.adjacency
    deg = g.degrees()
    max_deg = max(deg, default=0)

    bins = [0] * (max_deg + 1)
    for d in deg:
        bins[d] += 1
    start = 0
    for d in range(max_deg + 1):
        bins[d], start = start, start + bins[d]

    pos = [0] * n
    vert = [0] * n
    for v in range(n):
        pos[v] = bins[deg[v]]
        vert[pos[v]] = v
        bins[deg[v]] += 1
    for d in range(max_deg, 0, -1):
        bins[d] = bins[d - 1]
    bins[0] = 0

    for i in range(n):
        v = vert[i]
        for u in adjacency[v]:
            if deg[u] > deg[v]:
                du, pu = deg[u], pos[u]
                pw = bins[du]
                w = vert[pw]
                if u != w:
                    pos[u], vert[pu] = pw, w
                    pos[w], vert[pw] = pu, u
                bins[du] += 1
                deg[u] -= 1
    return ScoreTable(Measure.CORENESS, np.array(deg, dtype=np.int64))


def _brandes_dependencies(adjacency: Adjacency, sources: Sequence[int]) -> List[float]:
    """Сумма зависимостей delta_s(v) по всем источникам из sources (пары упорядочены)"""
    n = len(adjacency)
    total = [0.0] * n
    for s in sources:
        sigma = [0] * n
        dist = [-1] * n
        sigma[s] = 1
        dist[s] = 0
        order = []
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            dv = dist[v] + 1
            sv = sigma[v]
            for w in adjacency[v]:
                if dist[w] < 0:
                    dist[w] = dv
                    queue.append(w)
                if dist[w] == dv:
                    sigma[w] += sv
        delta = [0.0] * n
        for w in reversed(order):
            dw = dist[w] - 1
            coeff = (1.0 + delta[w]) / sigma[w]
            for v in adjacency[w]:
                if dist[v] == dw:
                    delta[v] += sigma[v] * coeff
            if w != s:
                total[w] += delta[w]
    return total


def _eccentricities(adjacency: Adjacency, sources: Sequence[int]) -> List[int]:
    n = len(adjacency)
    result = []
    for s in sources:
        dist = [-1] * n
        dist[s] = 0
        queue = deque([s])
        last = 0
        while queue:
            v = queue.popleft()
            last = dist[v]
            for w in adjacency[v]:
                if dist[w] < 0:
                    dist[w] = last + 1
                    queue.append(w)
        result.append(last)
    return result


def _chunks(items: Sequence[int], count: int) -> List[Sequence[int]]:
    size = -(-len(items) // count)
    return [items[i:i + size] for i in range(0, len(items), size)]


def _map_sources(func: Callable, adjacency: Adjacency, sources: Sequence[int], workers: int) -> List:
    """Запуск func по частям списка источников; результаты в порядке частей"""
    if workers <= 1 or len(sources) < 2 * workers:
        return [func(adjacency, sources)]
    chunks = _chunks(list(sources), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, [adjacency] * len(chunks), chunks))


def _accumulate(adjacency: Adjacency, sources: Sequence[int], workers: int) -> np.ndarray:
    parts = _map_sources(_brandes_dependencies, adjacency, sources, workers)
    total = np.zeros(len(adjacency), dtype=np.float64)
    for part in parts:
        total += np.asarray(part, dtype=np.float64)
    return total


def _settle(values: np.ndarray) -> np.ndarray:
    # Результат не зависит от порядка суммирования (и числа процессов)
    return np.round(values, SCORE_DECIMALS)


def betweenness_scores(g: Graph, workers: int = 1) -> ScoreTable:
    total = _accumulate(g.adjacency, range(g.node_count), workers)
    return ScoreTable(Measure.BETWEENNESS, _settle(total / 2.0))


def betweenness_approx(g: Graph, pivot_count: int, rng: RandomState = None, workers: int = 1) -> ScoreTable:
    """Оценка по pivot_count случайным источникам, масштабированная на |V|/pivot_count"""
    n = g.node_count
    if not 1 <= pivot_count <= n:
        raise CentralityError(f"pivot_count must be in [1, {n}], got {pivot_count}")
    rng = make_rng(rng)
    pivots = np.sort(rng.choice(n, size=pivot_count, replace=False)).tolist()
    total = _accumulate(g.adjacency, pivots, workers)
    return ScoreTable(Measure.BETWEENNESS, _settle(total * (n / pivot_count) / 2.0))


def eccentricity_scores(g: Graph, workers: int = 1) -> ScoreTable:
    if g.node_count == 0:
        raise GraphError("Eccentricity of an empty graph")
    if not g.is_connected():
        raise GraphError("Eccentricity is infinite on a disconnected graph; extract the giant component first")
    parts = _map_sources(_eccentricities, g.adjacency, range(g.node_count), workers)
    values = [e for part in parts for e in part]
    return ScoreTable(Measure.ECCENTRICITY, np.array(values, dtype=np.int64))


def compute_scores(g: Graph, measure: Measure, pivots: Optional[int] = None,
                   rng: RandomState = None, workers: int = 1) -> ScoreTable:
    """Вычисление одной меры; pivots задаёт приближённую посредническую центральность"""
    if measure is Measure.DEGREE:
        return degree_scores(g)
    if measure is Measure.CORENESS:
        return coreness_scores(g)
    if measure is Measure.BETWEENNESS:
        if pivots is not None and pivots < g.node_count:
            return betweenness_approx(g, pivots, rng, workers)
        return betweenness_scores(g, workers)
    if measure is Measure.ECCENTRICITY:
        return eccentricity_scores(g, workers)
    raise CentralityError(f"Unknown measure: {measure}")
