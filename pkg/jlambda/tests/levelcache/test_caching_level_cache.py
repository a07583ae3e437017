from unittest import TestCase
from unittest import mock

import pytest
from django.core.exceptions import ImproperlyConfigured
from django.core.files.storage import FileSystemStorage

from jlambda import settings
from jlambda.exceptions import ChecksumMismatch
from jlambda.levelcache import open_level_cache
from jlambda.levelcache.base import cache
from jlambda.levelcache.base import load_level_cache
from jlambda.levelcache.filesystem import CachingFileSystemLevelCache
from jlambda.levelcache.filesystem import FileSystemLevelCache
from jlambda.tests.utils import cache_dir
from jlambda.tests.utils import clean_cache_dir
from jlambda.tests.utils import known_level
from jlambda.tests.utils import make_test
from jlambda.tests.utils import override_setting


def caching_level_cache() -> CachingFileSystemLevelCache:
    clean_cache_dir()
    return CachingFileSystemLevelCache(FileSystemStorage(location=str(cache_dir)))


@make_test
def test_get_cache_key(case: TestCase) -> None:
    level_cache = caching_level_cache()
    key = level_cache.get_cache_key("ab" * 32)
    case.assertTrue(key.startswith(settings.cache_key_prefix))
    case.assertEqual(len(key), 64 + len(settings.cache_key_prefix))


@make_test
def test_post_save_hook_primes_cache(case: TestCase) -> None:
    level_cache = caching_level_cache()
    entry = level_cache.save_level(known_level(3))
    case.assertEqual(cache.get(level_cache.get_cache_key(entry.sha256)), known_level(3))
    with mock.patch("jlambda.levelcache.base.parse_level") as parse:
        case.assertEqual(level_cache.load_level(3), known_level(3))
    parse.assert_not_called()


@make_test
def test_load_populates_cache(case: TestCase) -> None:
    level_cache = caching_level_cache()
    entry = level_cache.save_level(known_level(4))
    cache.clear()
    case.assertEqual(level_cache.load_level(4), known_level(4))
    case.assertEqual(cache.get(level_cache.get_cache_key(entry.sha256)), known_level(4))


@make_test
@override_setting("memo_weight", 2)
def test_heavy_levels_are_not_memoized(case: TestCase) -> None:
    level_cache = caching_level_cache()
    entry = level_cache.save_level(known_level(3))
    case.assertIsNone(cache.get(level_cache.get_cache_key(entry.sha256)))
    level_cache.load_level(3)
    case.assertIsNone(cache.get(level_cache.get_cache_key(entry.sha256)))


@make_test
def test_checksum_is_verified_before_the_cache(case: TestCase) -> None:
    level_cache = caching_level_cache()
    level_cache.save_level(known_level(2))
    (cache_dir / "level-002.txt").write_bytes(b"corrupted")
    with case.assertRaises(ChecksumMismatch):
        level_cache.load_level(2)


def test_load_level_cache_from_dotted_path():
    klass = load_level_cache("jlambda.levelcache.filesystem.FileSystemLevelCache")
    assert klass is FileSystemLevelCache
    assert load_level_cache(CachingFileSystemLevelCache) is CachingFileSystemLevelCache


@pytest.mark.parametrize(
    "klass", ("jlambda.nowhere.Cache", "jlambda.engine.LevelTable", 3)
)
def test_load_level_cache_rejects_other_classes(klass):
    with pytest.raises(ImproperlyConfigured):
        load_level_cache(klass)


@override_setting("level_cache", "jlambda.levelcache.filesystem.FileSystemLevelCache")
def test_open_level_cache_uses_configured_class():
    clean_cache_dir()
    assert type(open_level_cache(str(cache_dir))) is FileSystemLevelCache


def test_open_level_cache_creates_directory(tmp_path):
    target = tmp_path / "nested" / "cache"
    level_cache = open_level_cache(str(target))
    assert isinstance(level_cache, CachingFileSystemLevelCache)
    assert target.is_dir()
