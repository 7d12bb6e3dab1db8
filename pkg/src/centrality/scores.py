import math
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, List, Optional, Sequence

import numpy as np
import pandas as pd

from src.exceptions import CentralityError


class Measure(str, Enum):
    DEGREE = "degree"
    CORENESS = "coreness"
    BETWEENNESS = "betweenness"
    ECCENTRICITY = "eccentricity"

    @property
    def maximize(self) -> bool:
        """Для эксцентриситета целевые вершины - с наименьшим значением"""
        return self is not Measure.ECCENTRICITY

    @classmethod
    def parse(cls, name: str) -> "Measure":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise CentralityError(f"Unknown measure: {name}") from None


@dataclass(frozen=True)
class ScoreTable:
    measure: Measure
    scores: np.ndarray

    def __len__(self) -> int:
        return int(self.scores.shape[0])

    def __getitem__(self, v: int):
        return self.scores[v].item()

    def to_frame(self, labels: Sequence[str]) -> pd.DataFrame:
        """Таблица node_label, measure, score"""
        if len(labels) != len(self):
            raise CentralityError(f"{len(labels)} labels for {len(self)} scores")
        return pd.DataFrame({
            "node_label": list(labels),
            "measure": self.measure.value,
            "score": self.scores,
        })

    @classmethod
    def from_frame(cls, frame: pd.DataFrame, labels: Sequence[str]) -> "ScoreTable":
        """Обратное преобразование; порядок строк восстанавливается по меткам"""
        measures = frame["measure"].unique()
        if len(measures) != 1:
            raise CentralityError(f"Expected a single measure, got {list(measures)}")
        by_label = dict(zip(frame["node_label"].astype(str), frame["score"]))
        missing = [label for label in labels if label not in by_label]
        if missing or len(by_label) != len(labels):
            raise CentralityError("Score table does not match graph labels")
        measure = Measure.parse(str(measures[0]))
        dtype = np.float64 if measure is Measure.BETWEENNESS else np.int64
        return cls(measure, np.array([by_label[label] for label in labels], dtype=dtype))


@dataclass(frozen=True)
class TargetSet:
    measure: Measure
    fraction: float
    members: FrozenSet[int]
    graph_size: int
    order: tuple = ()  # члены в порядке ранжирования

    @property
    def maximize(self) -> bool:
        return self.measure.maximize

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: int) -> bool:
        return v in self.members


def target_size(fraction: float, graph_size: int) -> int:
    # Допуск гасит ошибку округления: 0.1 * 30 = 3.0000000000000004
    return max(1, math.ceil(fraction * graph_size - 1e-9))


def rank_nodes(scores: ScoreTable) -> np.ndarray:
    """Вершины по убыванию значимости; при равенстве - по возрастанию id"""
    ids = np.arange(len(scores))
    values = scores.scores
    key = -values if scores.measure.maximize else values
    return np.lexsort((ids, key))


def build_target_set(scores: ScoreTable, p: float, graph_size: Optional[int] = None) -> TargetSet:
    if len(scores) == 0:
        raise CentralityError("Empty score table")
    if not 0.0 < p <= 1.0:
        raise CentralityError(f"Target fraction must be in (0, 1], got {p}")
    if graph_size is None:
        graph_size = len(scores)
    if graph_size != len(scores):
        raise CentralityError(f"Score table has {len(scores)} nodes, graph has {graph_size}")
    order: List[int] = rank_nodes(scores)[:target_size(p, graph_size)].tolist()
    return TargetSet(scores.measure, p, frozenset(order), graph_size, tuple(order))
