import sys

from src.cli.app import CrawlBenchApp

if __name__ == "__main__":
    sys.exit(CrawlBenchApp().run(sys.argv[1:]))
