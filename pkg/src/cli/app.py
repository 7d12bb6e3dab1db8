import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from src.bench.experiment import ExperimentRunner
from src.cli.handlers import CommandHandlers
from src.exceptions import ConfigError, CrawlBenchError, DataError, GraphError
from src.services.file_service import FileService
from src.services.log_service import LogService

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CONFIG = 2
EXIT_DATA = 3


class CrawlBenchApp:
    def __init__(self, log_dir: Optional[str] = None):
        self.log_service = LogService(log_dir)
        self.file_service = FileService(self.log_service)
        self.runner = ExperimentRunner(self.file_service, self.log_service)
        self.handlers = CommandHandlers(self.runner, self.file_service, self.log_service)

    def _fail(self, message: str, code: int) -> int:
        self.log_service.log_to_file(message, "error")
        print(f"❌ {message}", file=sys.stderr)
        return code

    def run(self, argv: Sequence[str]) -> int:
        """Выполнение команды; ошибки переводятся в коды возврата"""
        parser = self.handlers.build_parser()
        try:
            args = parser.parse_args(list(argv))
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else EXIT_OK

        self.log_service.log_to_file(f"Command {args.verb} started", "info")
        try:
            return args.handler(args)
        except (ConfigError, ValidationError) as e:
            return self._fail(f"Config error: {e}", EXIT_CONFIG)
        except (DataError, GraphError) as e:
            return self._fail(f"Data error: {e}", EXIT_DATA)
        except CrawlBenchError as e:
            return self._fail(f"{type(e).__name__}: {e}", EXIT_ERROR)
