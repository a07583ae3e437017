import logging
import os
import tempfile
from contextlib import contextmanager
from typing import Iterator

from django.core.files.storage import FileSystemStorage

from jlambda.exceptions import CacheLocked

from .base import LOCK_NAME
from .base import CachingLevelCache
from .base import LevelCache

logger = logging.getLogger(__name__)


class FileSystemLevelCache(LevelCache[FileSystemStorage]):
    def __init__(self, storage: FileSystemStorage) -> None:
        super().__init__(storage)
        os.makedirs(storage.location, exist_ok=True)

    def replace_file(self, name: str, content: bytes) -> None:
        fd, temp_path = tempfile.mkstemp(dir=self.storage.location, prefix=".tmp-")
        try:
            with os.fdopen(fd, "wb") as file:
                file.write(content)
                file.flush()
                os.fsync(file.fileno())
            os.replace(temp_path, self.storage.path(name))
        except BaseException:
            if os.path.exists(temp_path):
                os.unlink(temp_path)
            raise

    @contextmanager
    def lock(self) -> Iterator[None]:
        path = self.storage.path(LOCK_NAME)
        try:
            fd = os.open(path, os.O_CREAT | os.O_EXCL | os.O_WRONLY)
        except FileExistsError:
            raise CacheLocked(
                f"{self.storage.location} is locked by another run ({path})"
            ) from None
        try:
            os.write(fd, str(os.getpid()).encode())
            logger.debug("Acquired cache lock", extra={"file": path})
            yield
        finally:
            os.close(fd)
            os.unlink(path)


class CachingFileSystemLevelCache(
    CachingLevelCache[FileSystemStorage], FileSystemLevelCache
):
    pass
