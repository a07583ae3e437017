from django.core.files.storage import FileSystemStorage

from jlambda import settings

from .base import LevelCache
from .base import load_level_cache


def open_level_cache(directory: str) -> LevelCache:
    """An instance of the configured level cache class over directory."""
    klass = load_level_cache(settings.level_cache)
    return klass(FileSystemStorage(location=directory))


__all__ = ("LevelCache", "load_level_cache", "open_level_cache")
