import hashlib
import json
from io import StringIO
from typing import Any

from django.core.management import call_command

from jlambda.tests.utils import cache_dir


def call_jlambda(name: str, *args: Any, **kwargs: Any) -> str:
    out = StringIO()
    call_command(name, *args, verbosity=3, stdout=out, **kwargs)
    return out.getvalue()


def tamper(name: str, old: str, new: str) -> None:
    """Edit a level file and keep the manifest checksum consistent with it."""
    path = cache_dir / name
    content = path.read_text().replace(old, new).encode()
    path.write_bytes(content)
    manifest_path = cache_dir / "manifest.json"
    manifest = json.loads(manifest_path.read_text())
    for entry in manifest["levels"].values():
        if entry["file"] == name:
            entry["sha256"] = hashlib.sha256(content).hexdigest()
    manifest_path.write_text(json.dumps(manifest))
