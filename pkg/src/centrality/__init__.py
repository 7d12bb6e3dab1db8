from src.centrality.measures import (
    betweenness_approx,
    betweenness_scores,
    compute_scores,
    coreness_scores,
    degree_scores,
    eccentricity_scores,
)
from src.centrality.scores import Measure, ScoreTable, TargetSet, build_target_set, rank_nodes, target_size

__all__ = [
    "Measure",
    "ScoreTable",
    "TargetSet",
    "betweenness_approx",
    "betweenness_scores",
    "build_target_set",
    "compute_scores",
    "coreness_scores",
    "degree_scores",
    "eccentricity_scores",
    "rank_nodes",
    "target_size",
]
