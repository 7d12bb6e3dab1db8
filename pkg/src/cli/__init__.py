from src.cli.app import EXIT_CONFIG, EXIT_DATA, EXIT_ERROR, EXIT_OK, CrawlBenchApp
from src.cli.handlers import CommandHandlers

__all__ = ["CommandHandlers", "CrawlBenchApp", "EXIT_CONFIG", "EXIT_DATA", "EXIT_ERROR", "EXIT_OK"]
