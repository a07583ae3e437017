from typing import Any
from typing import Optional

from django.core.management.base import CommandError
from django.core.management.base import CommandParser

from jlambda.engine import LevelContext
from jlambda.engine import compute_level
from jlambda.management.base import EXIT_ENVIRONMENT
from jlambda.management.base import LevelCacheCommand


class Command(LevelCacheCommand):
    help = "Compute the levels 1..N of J_λ into the level cache, resuming if cached."

    def add_arguments(self, parser: CommandParser) -> None:
        super().add_arguments(parser)
        parser.add_argument("--max-n", dest="max_n", type=int, required=True)
        self.add_threads_argument(parser)

    def handle(self, *args: Any, **options: Any) -> Optional[str]:
        max_n = options["max_n"]
        if max_n < 1:
            raise CommandError(
                f"--max-n must be at least 1, found {max_n}",
                returncode=EXIT_ENVIRONMENT,
            )
        threads = self.threads(options)
        cache = self.open_cache(options["cache"])
        computed = 0
        with self.translate_errors(), cache.lock():
            cache.verify_manifest()
            context = LevelContext(source=cache)
            for n in range(1, max_n + 1):
                if cache.has_level(n):
                    self.log(f"Level {n} is cached, skipping", level=2)
                    continue
                table = compute_level(n, context, threads)
                cache.save_level(table)
                computed += 1
                self.log(
                    f"Computed level {n}: {len(table)} polynomials, "
                    f"max degree {table.max_degree}"
                )
            levels = cache.read_manifest().levels
            records = sum(entry.records for entry in levels.values())
        plural = "" if computed == 1 else "s"
        return f"{computed} level{plural} computed, {records} records cached."
