from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Sequence, Union

import numpy as np
import pandas as pd

from src.exceptions import MetricError
from src.metrics.coverage import CoverageCurve, auc

CurveLike = Union[CoverageCurve, np.ndarray]

# Допуск, в пределах которого AUC считаются равными при подсчёте побед
TIE_TOLERANCE = 1e-12


@dataclass
class RunResult:
    graph: str
    crawler: str
    seed: int
    seed_index: int
    curves: Dict[str, CoverageCurve] = field(default_factory=dict)

    @property
    def aucs(self) -> Dict[str, float]:
        return {key: auc(curve) for key, curve in self.curves.items()}


def _values(curve: CurveLike) -> np.ndarray:
    return curve.values if isinstance(curve, CoverageCurve) else np.asarray(curve, dtype=np.float64)


def _stack(curves: Mapping[str, CurveLike]) -> np.ndarray:
    if len(curves) < 2:
        raise MetricError(f"Need at least 2 methods to compare, got {len(curves)}")
    arrays = [_values(c) for c in curves.values()]
    if len({a.shape[0] for a in arrays}) != 1:
        raise MetricError("Curves have different lengths")
    return np.stack(arrays)


def gap_to_best(curves: Mapping[str, CurveLike]) -> Dict[str, np.ndarray]:
    """Отставание от поточечно лучшего метода (<= 0, у лидера 0)"""
    stacked = _stack(curves)
    best = stacked.max(axis=0)
    return {name: stacked[i] - best for i, name in enumerate(curves)}


def pointwise_leaders(curves: Mapping[str, CurveLike]) -> List[str]:
    """Лидер на каждой итерации; при равенстве - первый по порядку curves"""
    stacked = _stack(curves)
    names = list(curves)
    return [names[i] for i in stacked.argmax(axis=0)]


def leader_changes(curves: Mapping[str, CurveLike]) -> int:
    leaders = pointwise_leaders(curves)
    return sum(1 for prev, cur in zip(leaders, leaders[1:]) if prev != cur)


def budget_leaders(curves: Mapping[str, CurveLike], fractions: Sequence[float]) -> Dict[str, str]:
    """Лидер при бюджете, равном доле fraction от длины обхода"""
    leaders = pointwise_leaders(curves)
    length = len(leaders)
    return {
        f"{fraction:g}": leaders[min(length, max(1, int(round(fraction * length)))) - 1]
        for fraction in fractions
    }


def winner_tally(table: pd.DataFrame) -> Dict[str, Dict[str, int]]:
    """Сколько раз каждый краулер был лучшим по AUC для каждой меры.

    table: колонки graph, crawler, measure, auc. Для каждой пары (graph, measure)
    очко получают все краулеры с максимальным AUC (равенства делятся).
    """
    required = {"graph", "crawler", "measure", "auc"}
    if not required.issubset(table.columns):
        raise MetricError(f"AUC table needs columns {sorted(required)}")
    crawlers = sorted(table["crawler"].unique())
    if table["auc"].isna().any():
        raise MetricError("AUC table has empty cells")
    counts = {key: sorted(group["crawler"]) for key, group in table.groupby(["graph", "measure"])}
    for (graph, measure), present in counts.items():
        if present != crawlers:
            raise MetricError(f"Missing or duplicate crawlers for graph {graph}, measure {measure}: {present}")
    expected_cells = table["graph"].nunique() * table["measure"].nunique()
    if len(counts) != expected_cells:
        raise MetricError("AUC table is missing (graph, measure) cells")

    tally = {measure: {crawler: 0 for crawler in crawlers} for measure in sorted(table["measure"].unique())}
    for (graph, measure), group in table.groupby(["graph", "measure"]):
        best = group["auc"].max()
        for crawler in group.loc[group["auc"] >= best - TIE_TOLERANCE, "crawler"]:
            tally[measure][crawler] += 1
    return tally
