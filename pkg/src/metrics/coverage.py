from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from src.centrality.scores import Measure, TargetSet
from src.crawler.runner import RunTrace
from src.exceptions import MetricError


class MetricKind(str, Enum):
    NODE_COVERAGE = "node_coverage"
    TARGET_OBSERVED = "target_observed"
    TARGET_CLOSED = "target_closed"

    @classmethod
    def parse(cls, name: str) -> "MetricKind":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise MetricError(f"Unknown metric: {name}") from None


class Variant(str, Enum):
    OBSERVED = "observed"
    CLOSED = "closed"


@dataclass(frozen=True)
class CoverageCurve:
    """values[i - 1] - значение метрики после i-го запроса"""
    values: np.ndarray
    metric: MetricKind
    measure: Optional[Measure] = None

    def __len__(self) -> int:
        return int(self.values.shape[0])

    @property
    def key(self) -> str:
        """Ключ в сводке: nodes, <measure> или <measure>_observed"""
        if self.metric is MetricKind.NODE_COVERAGE:
            return "nodes"
        if self.metric is MetricKind.TARGET_OBSERVED:
            return f"{self.measure.value}_observed"
        return self.measure.value

    @property
    def final_value(self) -> float:
        return float(self.values[-1])


def _cumulative(times: np.ndarray, length: int) -> np.ndarray:
    """Число событий с моментом <= i для i = 1..length"""
    counts = np.bincount(times[times <= length], minlength=length + 1)
    return np.cumsum(counts)[1:]


def node_coverage(trace: RunTrace) -> CoverageCurve:
    values = _cumulative(trace.discovered_at, trace.length) / trace.node_count
    return CoverageCurve(values, MetricKind.NODE_COVERAGE)


def target_coverage(trace: RunTrace, target: TargetSet, variant: Union[Variant, str] = Variant.CLOSED) -> CoverageCurve:
    """Доля V*, попавшая в V' (observed) или в V'_c (closed)"""
    variant = Variant(variant)
    if target.graph_size != trace.node_count:
        raise MetricError(f"Target set built on {target.graph_size} nodes, trace has {trace.node_count}")
    members = np.fromiter(sorted(target.members), dtype=np.int64, count=len(target.members))
    times = trace.discovered_at if variant is Variant.OBSERVED else trace.closed_at
    values = _cumulative(times[members], trace.length) / members.shape[0]
    metric = MetricKind.TARGET_OBSERVED if variant is Variant.OBSERVED else MetricKind.TARGET_CLOSED
    return CoverageCurve(values, metric, target.measure)


def average_curves(curves: Sequence[CoverageCurve]) -> CoverageCurve:
    """Поточечное среднее кривых по затравкам"""
    if not curves:
        raise MetricError("No curves to average")
    lengths = {len(c) for c in curves}
    if len(lengths) != 1:
        raise MetricError(f"Curves have different lengths: {sorted(lengths)}")
    values = np.mean(np.stack([c.values for c in curves]), axis=0)
    return CoverageCurve(values, curves[0].metric, curves[0].measure)


def auc(curve: Union[CoverageCurve, np.ndarray]) -> float:
    """Площадь под кривой, нормированная на бюджет: среднее значение по итерациям"""
    values = curve.values if isinstance(curve, CoverageCurve) else np.asarray(curve, dtype=np.float64)
    if values.shape[0] == 0:
        raise MetricError("AUC of an empty curve")
    return float(values.mean())


def downsample(curve: CoverageCurve, points: int) -> Tuple[np.ndarray, np.ndarray]:
    """Итерации (с 1) и значения, прореженные до points точек; последняя итерация сохраняется"""
    length = len(curve)
    iterations = np.arange(1, length + 1)
    if points <= 0 or points >= length:
        return iterations, curve.values
    picked = np.unique(np.linspace(1, length, points).round().astype(np.int64))
    return picked, curve.values[picked - 1]
