from typing import Any
from typing import List
from typing import Optional

from django.core.management.base import CommandError
from django.core.management.base import CommandParser

from jlambda.engine import LevelContext
from jlambda.engine import LevelTable
from jlambda.engine import compute_levels
from jlambda.engine import jnr_aggregate
from jlambda.management.base import EXIT_ENVIRONMENT
from jlambda.management.base import EXIT_THEOREM_FAILURE
from jlambda.management.base import LevelCacheCommand
from jlambda.oracles import power_sum_family_check
from jlambda.oracles import tree_inversion_poly
from jlambda.oracles import tutte_I
from jlambda.oracles import verify_factorization
from jlambda.partitions import Partition
from jlambda.verifier import CheckResult

KINDS = ("trees", "tutte", "symfunc")


class Command(LevelCacheCommand):
    help = "Compare an independent oracle against the engine."

    def add_arguments(self, parser: CommandParser) -> None:
        super().add_arguments(parser)
        parser.add_argument("kind", choices=KINDS)
        parser.add_argument("--n", dest="n", type=int, default=4)
        parser.add_argument("--r", dest="r", type=int, default=1)
        self.add_threads_argument(parser)

    def handle(self, *args: Any, **options: Any) -> Optional[str]:
        kind, n, r = options["kind"], options["n"], options["r"]
        minimum = 2 if kind == "trees" else 1
        if n < minimum or (kind == "tutte" and not 1 <= r <= n):
            raise CommandError(
                f"invalid oracle parameters n={n}, r={r}", returncode=EXIT_ENVIRONMENT
            )
        with self.translate_errors():
            level = self.engine_level(options["cache"], n)
            if kind == "symfunc":
                return self.symfunc(level)
            if kind == "trees":
                oracle = tree_inversion_poly(n, self.threads(options))
                engine = level[Partition.single_row(n)]
                subject = f"trees n={n}"
            else:
                oracle = tutte_I(n - r, r, 1, self.threads(options))
                engine = jnr_aggregate(n, r, level)
                subject = f"tutte n={n} r={r}"
        if oracle != engine:
            self.stdout.write(f"oracle: {oracle.text}")
            self.stdout.write(f"engine: {engine.text}")
            raise CommandError(f"{subject}: mismatch", returncode=EXIT_THEOREM_FAILURE)
        return f"{subject}: match {engine.text}"

    def engine_level(self, directory: str, n: int) -> LevelTable:
        """Level n from the cache, computed in memory when it is not cached."""
        cache = self.open_cache(directory)
        if cache.has_level(n):
            return cache.load_level(n)
        self.log(f"Level {n} is not cached, computing it in memory")
        return compute_levels(n, LevelContext())[n]

    def symfunc(self, level: LevelTable) -> str:
        n = level.n
        results: List[CheckResult] = []
        for lam, poly in level.items():
            outcome = verify_factorization(lam, poly)
            results += outcome
            passed = all(check.passed for check in outcome)
            self.log(f"{lam.text}: {'pass' if passed else 'fail'}")
        for r in range(1, n + 1):
            results.append(power_sum_family_check(n, r, jnr_aggregate(n, r, level)))
        failed = [check for check in results if not check.passed]
        for check in failed:
            self.stdout.write(f"{check.subject} {check.check}: {check.witness}")
        if failed:
            raise CommandError(
                f"symfunc n={n}: {len(failed)} of {len(results)} checks failed",
                returncode=EXIT_THEOREM_FAILURE,
            )
        return f"symfunc n={n}: {len(results)} checks passed"
