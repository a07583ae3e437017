import os
import sys
from typing import List
from typing import Optional


def main(argv: Optional[List[str]] = None) -> None:
    """`jlambda compute --max-n 10` runs the compute command, and so on."""
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "jlambda.conf")
    from django.core.management import execute_from_command_line

    argv = sys.argv if argv is None else argv
    execute_from_command_line(["jlambda", *argv[1:]])


if __name__ == "__main__":
    main()
