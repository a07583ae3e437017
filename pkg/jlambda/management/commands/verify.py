import pathlib
import time
from datetime import datetime
from datetime import timezone
from typing import Any
from typing import List
from typing import Optional

from django.core.management.base import CommandError
from django.core.management.base import CommandParser

from jlambda.engine import JnrCache
from jlambda.engine import LevelContext
from jlambda.engine import degree_of
from jlambda.exceptions import MissingLevel
from jlambda.management.base import EXIT_CONJECTURE_FAILURE
from jlambda.management.base import EXIT_ENVIRONMENT
from jlambda.management.base import EXIT_THEOREM_FAILURE
from jlambda.management.base import LevelCacheCommand
from jlambda.partitions import Partition
from jlambda.report import ReportDoc
from jlambda.report import ReportMetadata
from jlambda.report import RunConfig
from jlambda.verifier import CheckResult
from jlambda.verifier import level_checks
from jlambda.verifier import result
from jlambda.verifier import weight_checks


class Command(LevelCacheCommand):
    help = "Run every check over the cached levels 1..N and write a report."

    def add_arguments(self, parser: CommandParser) -> None:
        super().add_arguments(parser)
        parser.add_argument("--max-n", dest="max_n", type=int, required=True)
        parser.add_argument("--report", dest="report", required=True)
        parser.add_argument(
            "--strict",
            action="store_true",
            dest="strict",
            default=False,
            help="Exit with status 2 when a conjecture check fails.",
        )
        self.add_threads_argument(parser)

    def handle(self, *args: Any, **options: Any) -> Optional[str]:
        max_n = options["max_n"]
        if max_n < 1:
            raise CommandError(
                f"--max-n must be at least 1, found {max_n}",
                returncode=EXIT_ENVIRONMENT,
            )
        started_at = datetime.now(timezone.utc).isoformat()
        clock = time.monotonic()
        threads = self.threads(options)
        cache = self.open_cache(options["cache"])
        records: List[CheckResult] = []
        max_degree = 0
        with self.translate_errors():
            for n in range(1, max_n + 1):
                if not cache.has_level(n):
                    raise MissingLevel(n, options["cache"])
            context = LevelContext(source=cache)
            jnr_cache: JnrCache = {}
            for n in range(1, max_n + 1):
                table = context.level(n)
                records += level_checks(table, threads)
                records += weight_checks(n, context, jnr_cache)
                records += self.census_degree(n, table.max_degree)
                max_degree = max(max_degree, table.max_degree)
                self.log(f"Verified level {n}: {len(table)} polynomials")

        report = ReportDoc.build(
            RunConfig(
                max_n=max_n,
                strict=options["strict"],
                threads=threads,
            ),
            records,
            ReportMetadata(
                started_at=started_at, wall_time_seconds=time.monotonic() - clock
            ),
            max_degree=max_degree,
        )
        pathlib.Path(options["report"]).write_text(report.render("json"))
        summary = report.summary
        message = (
            f"{summary.polynomials_checked} polynomials checked, "
            f"{summary.theorem_failures} theorem failures, "
            f"{summary.conjecture_failures} conjecture failures, "
            f"{summary.findings} findings, max degree {max_degree}."
        )
        if summary.theorem_failures:
            raise CommandError(message, returncode=EXIT_THEOREM_FAILURE)
        if options["strict"] and summary.conjecture_failures:
            raise CommandError(message, returncode=EXIT_CONJECTURE_FAILURE)
        return message

    @staticmethod
    def census_degree(n: int, found: int) -> List[CheckResult]:
        """No polynomial of a level has a larger degree than J_n."""
        expected = degree_of(Partition.single_row(n))
        return [
            result(
                f"n={n}",
                "max_degree",
                found == expected,
                expected=expected,
                found=found,
            )
        ]
