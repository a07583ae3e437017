from typing import Any
from typing import Optional

from django.core.management.base import CommandError
from django.core.management.base import CommandParser

from jlambda.management.base import EXIT_ENVIRONMENT
from jlambda.management.base import LevelCacheCommand
from jlambda.partitions import Partition
from jlambda.qpoly import content_split
from jlambda.verifier import partition_checks


class Command(LevelCacheCommand):
    help = "Print a cached J_λ with its content, reduced form and check flags."

    def add_arguments(self, parser: CommandParser) -> None:
        super().add_arguments(parser)
        parser.add_argument("--partition", dest="partition", required=True)

    def handle(self, *args: Any, **options: Any) -> Optional[str]:
        try:
            lam = Partition.parse(options["partition"])
        except ValueError as e:
            raise CommandError(str(e), returncode=EXIT_ENVIRONMENT) from e
        if not lam:
            raise CommandError(
                "the empty partition has no J", returncode=EXIT_ENVIRONMENT
            )
        with self.translate_errors():
            poly = self.open_cache(options["cache"]).load_level(lam.weight)[lam]
        delta, reduced = content_split(poly)
        lines = [
            f"J = {poly.text}",
            f"degree = {poly.degree}",
            f"delta = {delta}",
            f"reduced = {reduced.text}",
            f"monic_after_reduction = {'yes' if reduced.leading == 1 else 'no'}",
        ]
        lines += [
            f"check {check.check} = {'pass' if check.passed else 'fail'}"
            for check in partition_checks(lam, poly)
        ]
        return "\n".join(lines)
