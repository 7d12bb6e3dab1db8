from src.metrics.aggregate import (
    RunResult,
    budget_leaders,
    gap_to_best,
    leader_changes,
    pointwise_leaders,
    winner_tally,
)
from src.metrics.coverage import (
    CoverageCurve,
    MetricKind,
    Variant,
    auc,
    average_curves,
    downsample,
    node_coverage,
    target_coverage,
)

__all__ = [
    "CoverageCurve",
    "MetricKind",
    "RunResult",
    "Variant",
    "auc",
    "average_curves",
    "budget_leaders",
    "downsample",
    "gap_to_best",
    "leader_changes",
    "node_coverage",
    "pointwise_leaders",
    "target_coverage",
    "winner_tally",
]
