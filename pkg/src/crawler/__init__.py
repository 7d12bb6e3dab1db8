from src.crawler.advanced import DensificationExpansionCrawler, Mode, densification_pick, densification_score
from src.crawler.basic import (
    BreadthFirstSearchCrawler,
    Crawler,
    DepthFirstSearchCrawler,
    MaximumObservedDegreeCrawler,
    RandomCrawler,
    RandomWalkCrawler,
)
from src.crawler.runner import CRAWLERS, CrawlSnapshot, RunTrace, make_crawler, run_crawl
from src.crawler.state import CrawlState, SampleEdges, SampleGraph, SampleUpdate, query, start

__all__ = [
    "BreadthFirstSearchCrawler",
    "CRAWLERS",
    "CrawlSnapshot",
    "CrawlState",
    "Crawler",
    "DensificationExpansionCrawler",
    "DepthFirstSearchCrawler",
    "MaximumObservedDegreeCrawler",
    "Mode",
    "RandomCrawler",
    "RandomWalkCrawler",
    "RunTrace",
    "SampleEdges",
    "SampleGraph",
    "SampleUpdate",
    "densification_pick",
    "densification_score",
    "make_crawler",
    "query",
    "run_crawl",
    "start",
]
