from contextlib import contextmanager
from typing import Any
from typing import Iterator
from typing import Optional

from django.core.management.base import BaseCommand
from django.core.management.base import CommandError
from django.core.management.base import CommandParser

from jlambda import __version__
from jlambda import settings
from jlambda.exceptions import EngineError
from jlambda.exceptions import GuardViolation
from jlambda.exceptions import InexactDivision
from jlambda.exceptions import LevelCacheError
from jlambda.exceptions import NegativePowerResidue
from jlambda.levelcache import LevelCache
from jlambda.levelcache import open_level_cache

# Exit statuses: theorem failures are bugs, conjecture failures under --strict
# are findings, anything about the environment or the cache is its own class.
EXIT_THEOREM_FAILURE = 1
EXIT_CONJECTURE_FAILURE = 2
EXIT_ENVIRONMENT = 3


class LevelCacheCommand(BaseCommand):
    """Shared options and error mapping of the commands that read a level cache."""

    verbosity = 1

    def get_version(self) -> str:
        return __version__

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument(
            "--cache",
            dest="cache",
            default=settings.cache_dir,
            help="Level cache directory (default: JLAMBDA_CACHE_DIR).",
        )

    def add_threads_argument(self, parser: CommandParser) -> None:
        parser.add_argument(
            "--threads",
            dest="threads",
            type=int,
            default=None,
            help="Worker threads (default: JLAMBDA_THREADS, 0 runs sequentially).",
        )

    def execute(self, *args: Any, **options: Any) -> Optional[str]:
        self.verbosity = options.get("verbosity", 1)
        return super().execute(*args, **options)

    def log(self, msg: str, level: int = 2) -> None:
        if self.verbosity >= level:
            self.stdout.write(msg)

    def open_cache(self, directory: str) -> LevelCache:
        return open_level_cache(directory)

    @staticmethod
    def threads(options: Any) -> int:
        threads = options.get("threads")
        return settings.threads if threads is None else threads

    @contextmanager
    def translate_errors(self) -> Iterator[None]:
        try:
            yield
        except (EngineError, InexactDivision, NegativePowerResidue) as e:
            raise CommandError(str(e), returncode=EXIT_THEOREM_FAILURE) from e
        except (LevelCacheError, GuardViolation) as e:
            raise CommandError(str(e), returncode=EXIT_ENVIRONMENT) from e
