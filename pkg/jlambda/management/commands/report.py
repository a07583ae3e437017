import pathlib
from typing import Any
from typing import Optional

from django.core.management.base import BaseCommand
from django.core.management.base import CommandError
from django.core.management.base import CommandParser
from pydantic import ValidationError

from jlambda import __version__
from jlambda.management.base import EXIT_ENVIRONMENT
from jlambda.report import FORMATS
from jlambda.report import ReportDoc


class Command(BaseCommand):
    help = "Render a verification report as JSON or CSV."

    def get_version(self) -> str:
        return __version__

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument("--format", dest="format", choices=FORMATS, default="json")
        parser.add_argument("--report", dest="report", required=True)

    def handle(self, *args: Any, **options: Any) -> Optional[str]:
        path = pathlib.Path(options["report"])
        try:
            report = ReportDoc.model_validate_json(path.read_text())
        except (OSError, ValidationError) as e:
            raise CommandError(
                f"cannot read report {path}: {e}", returncode=EXIT_ENVIRONMENT
            ) from e
        return report.render(options["format"]).rstrip("\n")
