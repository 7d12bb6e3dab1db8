"""DE-краулер: чередование режимов уплотнения (Densification) и расширения (Expansion).

V'_o упорядочивается по (-deg(v, S), id). В режиме расширения выбирается случайная
вершина из нижних 80%, в режиме уплотнения - вершина верхних 20% с максимальной
оценкой phi(v) = deg(v, S) / <deg(v, S)> * (1 - clust(v, S)).

Переключение режимов: каждый режим хранит экспоненциальное среднее числа новых
вершин за запрос. Режим работает не меньше burst запросов; на границе серии он
уступает другому режиму, если его среднее меньше switch_ratio * среднее другого.
Оба средних инициализируются степенью затравки (числом вершин, открытых первым запросом).
"""
import logging
from enum import Enum
from typing import Dict, Iterable, Optional, Tuple

import numpy as np

from src.config.settings import settings
from src.crawler.basic import Crawler
from src.crawler.state import CrawlState, SampleUpdate
from src.graph.generators import RandomState
from src.graph.graph import local_clustering

logger = logging.getLogger(__name__)


class Mode(str, Enum):
    EXPANSION = "expansion"
    DENSIFICATION = "densification"

    @property
    def other(self) -> "Mode":
        return Mode.DENSIFICATION if self is Mode.EXPANSION else Mode.EXPANSION


def densification_score(degree: float, mean_degree: float, clustering: float) -> float:
    if mean_degree <= 0:
        return 0.0
    return degree / mean_degree * (1.0 - clustering)


def densification_pick(candidates: Iterable[Tuple[int, float, float]], mean_degree: float) -> int:
    """Вершина с максимальной phi среди (node, degree, clustering); при равенстве - меньший id"""
    best = min(candidates, key=lambda c: (-densification_score(c[1], mean_degree, c[2]), c[0]))
    return best[0]


def split_point(frontier_size: int, top_fraction: float) -> int:
    """Размер верхней части фронта (не меньше одной вершины)"""
    return max(1, int(top_fraction * frontier_size))


class DensificationExpansionCrawler(Crawler):
    short = "DE"

    def __init__(self, rng: RandomState = None, burst: Optional[int] = None, decay: Optional[float] = None,
                 switch_ratio: Optional[float] = None, top_fraction: Optional[float] = None):
        super().__init__(rng)
        self.burst = burst or settings.DE_BURST
        self.decay = settings.DE_DECAY if decay is None else decay
        self.switch_ratio = settings.DE_SWITCH_RATIO if switch_ratio is None else switch_ratio
        self.top_fraction = top_fraction or settings.DE_TOP_FRACTION

    def reset(self, state: CrawlState) -> None:
        self.mode = Mode.EXPANSION
        self.mode_queries = 0
        self.averages: Dict[Mode, Optional[float]] = {Mode.EXPANSION: None, Mode.DENSIFICATION: None}
        self.switches = 0
        self.in_frontier = np.zeros(state.graph.node_count, dtype=bool)
        self.in_frontier[list(state.observed)] = True
        self.clustering: Dict[int, float] = {}

    def observe(self, state: CrawlState, update: SampleUpdate) -> None:
        self.in_frontier[update.node] = False
        if update.new_nodes:
            self.in_frontier[list(update.new_nodes)] = True
        self._invalidate(state, update)

        gained = float(len(update.new_nodes))
        if self.averages[self.mode] is None:
            self.averages = {Mode.EXPANSION: gained, Mode.DENSIFICATION: gained}
        self.averages[self.mode] = self.decay * self.averages[self.mode] + (1.0 - self.decay) * gained
        self.mode_queries += 1
        if self.mode_queries >= self.burst:
            self.mode_queries = 0
            current, other = self.averages[self.mode], self.averages[self.mode.other]
            if current < self.switch_ratio * other:
                logger.debug(f"DE switch {self.mode.value} -> {self.mode.other.value} at iteration "
                             f"{state.iteration} ({current:.3f} < {self.switch_ratio} * {other:.3f})")
                self.mode = self.mode.other
                self.switches += 1

    def _invalidate(self, state: CrawlState, update: SampleUpdate) -> None:
        """Новое ребро (a, b) меняет clust у a, b и у их общих соседей"""
        sample = state.sample
        for a, b in update.new_edges:
            self.clustering.pop(a, None)
            self.clustering.pop(b, None)
            for c in sample.neighbors(a) & sample.neighbors(b):
                self.clustering.pop(c, None)

    def _clustering(self, state: CrawlState, v: int) -> float:
        value = self.clustering.get(v)
        if value is None:
            value = self.clustering[v] = local_clustering(state.sample, v)
        return value

    def _select(self, state: CrawlState) -> int:
        frontier = np.flatnonzero(self.in_frontier)
        if frontier.shape[0] == 1:
            return int(frontier[0])
        degrees = state.sample.degree[frontier]
        # frontier уже по возрастанию id, устойчивая сортировка сохраняет этот порядок
        order = np.argsort(-degrees, kind="stable")
        top = split_point(frontier.shape[0], self.top_fraction)

        if self.mode is Mode.DENSIFICATION:
            mean_degree = float(degrees.mean())
            candidates = [
                (int(frontier[i]), float(degrees[i]), self._clustering(state, int(frontier[i])))
                for i in order[:top]
            ]
            return densification_pick(candidates, mean_degree)

        bottom = order[top:] if order.shape[0] > top else order
        return int(frontier[bottom[int(self.rng.integers(bottom.shape[0]))]])
