from itertools import combinations
from typing import Dict, Sequence

from src.centrality.scores import ScoreTable, TargetSet, build_target_set
from src.exceptions import CentralityError


def emit_target_overlap(score_tables: Sequence[ScoreTable], p: float) -> Dict[str, Dict[str, int]]:
    """Размеры попарных и тройных пересечений целевых множеств V*"""
    if len(score_tables) < 2:
        raise CentralityError("Target overlap needs at least 2 measures")
    sizes = {len(table) for table in score_tables}
    if len(sizes) != 1:
        raise CentralityError(f"Score tables come from different graphs (sizes {sorted(sizes)})")
    targets: Dict[str, TargetSet] = {t.measure.value: build_target_set(t, p) for t in score_tables}
    if len(targets) != len(score_tables):
        raise CentralityError("Duplicate measures in overlap request")

    report = {
        "sizes": {name: len(target) for name, target in targets.items()},
        "pairwise": {},
        "triple": {},
    }
    for group, key in ((2, "pairwise"), (3, "triple")):
        for names in combinations(targets, group):
            common = frozenset.intersection(*(targets[name].members for name in names))
            report[key]["&".join(names)] = len(common)
    return report
