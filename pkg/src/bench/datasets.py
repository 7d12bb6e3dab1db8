"""Реестр наборов данных и проверка загруженных файлов.

Файлы наборов не скачиваются: их нужно положить в DATA_DIR под именем filename.
Ожидаемые размеры относятся к гигантской компоненте.
"""
from dataclasses import dataclass
from typing import Dict, Optional

from pydantic import BaseModel, ConfigDict, PositiveInt

from src.graph.graph import giant_component
from src.parser.edge_list import load_edge_list
from src.services.log_service import LogService


class DatasetRegistryEntry(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    filename: str
    nodes: PositiveInt
    edges: PositiveInt
    description: str
    origin: str = ""


REGISTRY: Dict[str, DatasetRegistryEntry] = {
    entry.name: entry
    for entry in (
        DatasetRegistryEntry(
            name="hamsterster", filename="hamsterster.edges", nodes=2000, edges=16097,
            description="friendship graph of Hamsterster",
            origin="networkrepository.com / KONECT (petster-hamster)"),
        DatasetRegistryEntry(
            name="DCAM", filename="dcam.edges", nodes=2752, edges=68741,
            description="community subgraph from VKontakte",
            origin="manual API crawl of one VKontakte community, open profiles only"),
        DatasetRegistryEntry(
            name="facebook", filename="facebook.edges", nodes=63392, edges=816886,
            description="friendship data of Facebook users (2009)",
            origin="networkrepository.com / KONECT"),
        DatasetRegistryEntry(
            name="slashdot", filename="slashdot.edges", nodes=51083, edges=131175,
            description="reply network of technology website Slashdot",
            origin="networkrepository.com / KONECT"),
        DatasetRegistryEntry(
            name="github", filename="github.edges", nodes=120865, edges=439858,
            description="membership network of the software development hosting site Github",
            origin="networkrepository.com / KONECT"),
        DatasetRegistryEntry(
            name="dblp2010", filename="dblp2010.edges", nodes=226413, edges=716460,
            description="co-authorship network",
            origin="networkrepository.com"),
    )
}


@dataclass(frozen=True)
class DatasetReport:
    name: str
    path: str
    expected_nodes: int
    expected_edges: int
    actual_nodes: int
    actual_edges: int

    @property
    def matches(self) -> bool:
        return self.expected_nodes == self.actual_nodes and self.expected_edges == self.actual_edges

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "path": self.path,
            "expected": {"nodes": self.expected_nodes, "edges": self.expected_edges},
            "actual": {"nodes": self.actual_nodes, "edges": self.actual_edges},
            "matches": self.matches,
        }


def verify_dataset(entry: DatasetRegistryEntry, path: str, log_service: Optional[LogService] = None) -> DatasetReport:
    """Сравнение гигантской компоненты файла с ожидаемыми размерами.

    Расхождение - предупреждение, а не ошибка: версии публичных наборов меняются.
    """
    graph = giant_component(load_edge_list(path))
    report = DatasetReport(entry.name, path, entry.nodes, entry.edges, graph.node_count, graph.edge_count)
    if log_service:
        if report.matches:
            log_service.log_to_file(f"Dataset {entry.name}: {graph.node_count} nodes, {graph.edge_count} edges", "info")
        else:
            log_service.log_to_file(
                f"Dataset {entry.name} differs from expected: {graph.node_count}/{graph.edge_count} "
                f"vs {entry.nodes}/{entry.edges} (nodes/edges)", "warning")
    return report
