import os
from typing import Type
from typing import TypeVar

from django.conf import settings
from typing_extensions import Final

T = TypeVar("T")


def _get_setting(type_: Type[T], key: str, default: T) -> T:
    value = getattr(settings, key, default)
    if not isinstance(value, type_):
        raise ValueError(
            f"The {key!r} setting must be of type {type_!r}, found {type(value)}"
        )
    return value


debug: Final = _get_setting(bool, "JLAMBDA_DEBUG", _get_setting(bool, "DEBUG", False))
cache_dir: Final = _get_setting(
    str, "JLAMBDA_CACHE_DIR", os.environ.get("JLAMBDA_CACHE_DIR", "jlambda-cache")
)
level_cache: Final = _get_setting(
    str,
    "JLAMBDA_LEVEL_CACHE",
    "jlambda.levelcache.filesystem.CachingFileSystemLevelCache",
)
cache_key_prefix: Final = _get_setting(
    str, "JLAMBDA_CACHE_KEY_PREFIX", "jlambda01_level_"
)
cache: Final = _get_setting(str, "JLAMBDA_CACHE", "default")
threads: Final = _get_setting(int, "JLAMBDA_THREADS", 0)
memo_weight: Final = _get_setting(int, "JLAMBDA_MEMO_WEIGHT", 25)
tree_max_n: Final = _get_setting(int, "JLAMBDA_TREE_MAX_N", 9)
subset_guard: Final = _get_setting(int, "JLAMBDA_SUBSET_GUARD", 24)
symfunc_max_weight: Final = _get_setting(int, "JLAMBDA_SYMFUNC_MAX_WEIGHT", 10)
