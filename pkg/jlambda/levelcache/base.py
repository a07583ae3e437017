import abc
import hashlib
import logging
import pydoc
from functools import lru_cache
from typing import ContextManager
from typing import Dict
from typing import Generic
from typing import Tuple
from typing import Type
from typing import TypeVar
from typing import Union

from django.core.cache import caches
from django.core.exceptions import ImproperlyConfigured
from django.core.files.storage import Storage
from pydantic import BaseModel
from pydantic import ValidationError

from jlambda import settings
from jlambda.engine import LevelTable
from jlambda.exceptions import ChecksumMismatch
from jlambda.exceptions import FormatVersionUnsupported
from jlambda.exceptions import IncompleteLevel
from jlambda.exceptions import LevelCacheError
from jlambda.exceptions import MissingLevel
from jlambda.partitions import Partition
from jlambda.qpoly import IntPoly

_Storage = TypeVar("_Storage", bound=Storage)

LEVEL_FORMAT = "jlambda-level/1"
MANIFEST_FORMAT = "jlambda-manifest/1"
MANIFEST_NAME = "manifest.json"
LOCK_NAME = ".lock"

cache = caches[settings.cache]
logger = logging.getLogger(__name__)


class ManifestEntry(BaseModel):
    file: str
    sha256: str
    records: int
    max_degree: int


class Manifest(BaseModel):
    format: str = MANIFEST_FORMAT
    levels: Dict[int, ManifestEntry] = {}

    def render(self) -> bytes:
        ordered = Manifest(format=self.format, levels=dict(sorted(self.levels.items())))
        return (ordered.model_dump_json(indent=2) + "\n").encode()


def serialize_level(table: LevelTable) -> bytes:
    lines = [f"format={LEVEL_FORMAT}", f"n={table.n}"]
    lines += [f"{lam.text}|{poly.text}" for lam, poly in table.items()]
    return ("\n".join(lines) + "\n").encode()


def parse_level(content: bytes, n: int) -> LevelTable:
    lines = content.decode().splitlines()
    if not lines or lines[0] != f"format={LEVEL_FORMAT}":
        raise FormatVersionUnsupported(
            f"level {n} starts with {lines[0] if lines else ''!r}, "
            f"expected 'format={LEVEL_FORMAT}'"
        )
    if len(lines) < 2 or lines[1] != f"n={n}":
        raise IncompleteLevel(f"level {n} has the header {lines[1:2]!r}")
    try:
        entries = [_parse_record(line) for line in lines[2:]]
    except ValueError as e:
        raise IncompleteLevel(f"level {n} has a malformed record: {e}") from e
    return LevelTable(n, entries)


def _parse_record(line: str) -> Tuple[Partition, IntPoly]:
    partition, _, coefficients = line.partition("|")
    if not coefficients:
        raise ValueError(f"no coefficients in {line!r}")
    return Partition.parse(partition), IntPoly.parse(coefficients)


class LevelCache(abc.ABC, Generic[_Storage]):
    """
    Level files and their manifest inside a storage. Every read is checked
    against the manifest checksum.
    """

    def __init__(self, storage: _Storage) -> None:
        self.storage = storage

    @staticmethod
    def level_name(n: int) -> str:
        return f"level-{n:03d}.txt"

    @abc.abstractmethod
    def replace_file(self, name: str, content: bytes) -> None:
        """Write content under name so that readers see the old or new file only."""
        ...

    @abc.abstractmethod
    def lock(self) -> ContextManager[None]:
        """Hold the cache for a single writer."""
        ...

    def post_save_hook(self, table: LevelTable, entry: ManifestEntry) -> None:
        """Hook called after a level and the manifest are written."""
        ...

    def read_bytes(self, name: str) -> bytes:
        file = self.storage.open(name, "rb")
        try:
            return file.read()
        finally:
            file.close()

    def read_manifest(self) -> Manifest:
        if not self.storage.exists(MANIFEST_NAME):
            return Manifest()
        try:
            manifest = Manifest.model_validate_json(self.read_bytes(MANIFEST_NAME))
        except ValidationError as e:
            raise LevelCacheError(f"unreadable manifest: {e}") from e
        if manifest.format != MANIFEST_FORMAT:
            raise FormatVersionUnsupported(
                f"manifest format {manifest.format!r}, expected {MANIFEST_FORMAT!r}"
            )
        return manifest

    def write_manifest(self, manifest: Manifest) -> None:
        self.replace_file(MANIFEST_NAME, manifest.render())

    def has_level(self, n: int) -> bool:
        entry = self.read_manifest().levels.get(n)
        return entry is not None and self.storage.exists(entry.file)

    def cached_levels(self) -> Tuple[int, ...]:
        return tuple(sorted(self.read_manifest().levels))

    def read_verified(self, n: int) -> Tuple[bytes, ManifestEntry]:
        entry = self.read_manifest().levels.get(n)
        if entry is None or not self.storage.exists(entry.file):
            raise MissingLevel(n, getattr(self.storage, "location", None))
        content = self.read_bytes(entry.file)
        checksum = hashlib.sha256(content).hexdigest()
        if checksum != entry.sha256:
            raise ChecksumMismatch(entry.file, entry.sha256, checksum)
        return content, entry

    def verify_manifest(self) -> None:
        for n in self.cached_levels():
            self.read_verified(n)

    def save_level(self, table: LevelTable) -> ManifestEntry:
        content = serialize_level(table)
        entry = ManifestEntry(
            file=self.level_name(table.n),
            sha256=hashlib.sha256(content).hexdigest(),
            records=len(table),
            max_degree=table.max_degree,
        )
        self.replace_file(entry.file, content)
        manifest = self.read_manifest()
        manifest.levels[table.n] = entry
        self.write_manifest(manifest)
        logger.info(
            "Saved level",
            extra={"weight": table.n, "file": entry.file, "checksum": entry.sha256},
        )
        self.post_save_hook(table, entry)
        return entry

    def load_level(self, n: int) -> LevelTable:
        content, _ = self.read_verified(n)
        return parse_level(content, n)


class CachingLevelCache(LevelCache[_Storage], abc.ABC):
    """Parsed levels are kept in the Django cache, keyed by their checksum."""

    @lru_cache(maxsize=None)
    def get_cache_key(self, checksum: str) -> str:
        return settings.cache_key_prefix + checksum

    def load_level(self, n: int) -> LevelTable:
        content, entry = self.read_verified(n)
        key = self.get_cache_key(entry.sha256)
        table = cache.get(key)
        if table is None:
            table = parse_level(content, n)
            if n <= settings.memo_weight:
                cache.set(key, table, timeout=None)
        return table

    def post_save_hook(self, table: LevelTable, entry: ManifestEntry) -> None:
        """Cache the table that was just written."""
        super().post_save_hook(table, entry)
        if table.n <= settings.memo_weight:
            cache.set(self.get_cache_key(entry.sha256), table, timeout=None)


def load_level_cache(klass: Union[str, type, object]) -> Type[LevelCache[Storage]]:
    if isinstance(klass, str):
        klass = pydoc.locate(klass)
    if not isinstance(klass, type) or not issubclass(klass, LevelCache):
        raise ImproperlyConfigured(
            "Configured level caches must be subclasses of %s.%s"
            % (LevelCache.__module__, LevelCache.__qualname__)
        )
    return klass
