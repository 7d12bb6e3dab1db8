"""Синтетические графы для тестов и экспериментов.

Все генераторы детерминированы при фиксированном seed генератора numpy (PCG64).
"""
import logging
from typing import Any, Callable, Dict, Mapping, Optional, Sequence, Union

import numpy as np

from src.config.settings import settings
from src.exceptions import GraphError
from src.graph.graph import Graph, giant_component

logger = logging.getLogger(__name__)

RandomState = Union[np.random.Generator, int, None]


def make_rng(seed: RandomState = None) -> np.random.Generator:
    """Генератор PCG64; принимает готовый Generator или целый seed"""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(seed))


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise GraphError(message)


def path(n: int, rng: RandomState = None) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int, rng: RandomState = None) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star(n: int, rng: RandomState = None) -> Graph:
    """Звезда из n вершин; центр имеет id 0"""
    _require(n >= 1, f"star needs n >= 1, got {n}")
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def clique(n: int, rng: RandomState = None) -> Graph:
    _require(n >= 1, f"clique needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def barbell(a: int, b: int, rng: RandomState = None) -> Graph:
    """Две клики A = [0, a) и B = [a, a+b), соединённые мостом (a-1, a)"""
    _require(a >= 1 and b >= 1, f"barbell needs a, b >= 1, got ({a}, {b})")
    edges = [(i, j) for i in range(a) for j in range(i + 1, a)]
    edges += [(a + i, a + j) for i in range(b) for j in range(i + 1, b)]
    edges.append((a - 1, a))
    return Graph.from_edges(a + b, edges)


def balanced_tree(r: int, h: int, rng: RandomState = None) -> Graph:
    """Полное r-арное дерево высоты h; дети вершины i имеют id r*i+1 .. r*i+r"""
    _require(r >= 1 and h >= 0, f"balanced_tree needs r >= 1, h >= 0, got ({r}, {h})")
    n = sum(r ** level for level in range(h + 1))
    return Graph.from_edges(n, ((i, r * i + k) for i in range(n) for k in range(1, r + 1) if r * i + k < n))


def erdos_renyi(n: int, p: float, rng: RandomState = None, connected: bool = True,
                max_tries: Optional[int] = None) -> Graph:
    """Случайный граф G(n, p).

    connected=True: повторная генерация, пока граф не станет связным; после
    max_tries попыток возвращается гигантская компонента последней попытки.
    connected=False: граф возвращается как есть.
    """
    _require(n >= 1, f"erdos_renyi needs n >= 1, got {n}")
    _require(0.0 <= p <= 1.0, f"erdos_renyi needs 0 <= p <= 1, got {p}")
    rng = make_rng(rng)
    max_tries = max_tries or settings.ER_MAX_TRIES
    rows, cols = np.triu_indices(n, k=1)
    g = None
    for attempt in range(max_tries):
        mask = rng.random(rows.shape[0]) < p
        g = Graph.from_edges(n, zip(rows[mask].tolist(), cols[mask].tolist()))
        if not connected or g.is_connected():
            return g
    logger.debug(f"erdos_renyi({n}, {p}) not connected after {max_tries} tries, using giant component")
    return giant_component(g)


def preferential_attachment(n: int, m: int, rng: RandomState = None) -> Graph:
    """Модель Барабаши-Альберт: стартовая клика на m+1 вершинах,
    каждая новая вершина присоединяется к m различным вершинам пропорционально степени.
    """
    _require(m >= 1, f"preferential_attachment needs m >= 1, got {m}")
    _require(n > m, f"preferential_attachment needs n > m, got n={n}, m={m}")
    rng = make_rng(rng)
    edges = [(i, j) for i in range(m + 1) for j in range(i + 1, m + 1)]
    # Каждая вершина встречается в списке столько раз, какова её степень
    repeated = [v for edge in edges for v in edge]
    for source in range(m + 1, n):
        targets = set()
        while len(targets) < m:
            targets.add(repeated[int(rng.integers(len(repeated)))])
        for target in sorted(targets):
            edges.append((source, target))
            repeated.extend((source, target))
    return Graph.from_edges(n, edges)


GENERATORS: Dict[str, Callable[..., Graph]] = {
    "path": path,
    "cycle": cycle,
    "star": star,
    "clique": clique,
    "barbell": barbell,
    "balanced_tree": balanced_tree,
    "erdos_renyi": erdos_renyi,
    "preferential_attachment": preferential_attachment,
}


def generate(kind: str, params: Union[Sequence[Any], Mapping[str, Any]] = (),
             rng: RandomState = None) -> Graph:
    """Генерация графа по имени: generate("barbell", (5, 5)) или generate("path", {"n": 4})"""
    if kind not in GENERATORS:
        raise GraphError(f"Unknown generator kind: {kind}")
    func = GENERATORS[kind]
    try:
        if isinstance(params, Mapping):
            return func(**params, rng=rng)
        return func(*params, rng=rng)
    except TypeError as e:
        raise GraphError(f"Bad parameters for {kind}: {e}") from e
