import functools
import pathlib
import shutil
import unittest
from typing import Any
from typing import Callable
from typing import Type
from typing import TypeVar
from typing import cast

from django.core.cache import caches
from typing_extensions import Final

from jlambda import settings
from jlambda.engine import LevelTable
from jlambda.partitions import Partition
from jlambda.qpoly import IntPoly

cache_dir: Final = pathlib.Path(settings.cache_dir)

F = TypeVar("F", bound=Callable[..., Any])

# J_λ for |λ| <= 4, in partitions_of order.
KNOWN_LEVELS: Final = {
    1: {"1": "1"},
    2: {"2": "1", "1,1": "1"},
    3: {"3": "2,1", "2,1": "1,1", "1,1,1": "2"},
    4: {
        "4": "6,6,3,1",
        "3,1": "3,3,2,1",
        "2,2": "3,2,1",
        "2,1,1": "2,2,2",
        "1,1,1,1": "6",
    },
}
J_5: Final = IntPoly((24, 36, 30, 20, 10, 4, 1))
J_321: Final = IntPoly((10, 30, 35, 35, 30, 20, 12, 6, 2))


def known_level(n: int) -> LevelTable:
    return LevelTable(
        n,
        (
            (Partition.parse(lam), IntPoly.parse(poly))
            for lam, poly in KNOWN_LEVELS[n].items()
        ),
    )


def make_test(func: F) -> Type[unittest.TestCase]:
    """
    Creates a class that inherits from `unittest.TestCase` with the decorated
    function as a method. Create tests like this:

    >>> fn = lambda x: 1337
    >>> @make_test
    ... def test_fn(case):
    ...     case.assertEqual(fn(), 1337)
    """
    case = type(func.__name__, (unittest.TestCase,), {func.__name__: func})
    case.__module__ = func.__module__
    return case


def override_setting(name: str, value: Any) -> Callable[[F], F]:
    def decorator(fn: F) -> F:
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            original = getattr(settings, name)
            setattr(settings, name, value)
            try:
                return fn(*args, **kwargs)
            finally:
                setattr(settings, name, original)

        return cast(F, wrapper)

    return decorator


def clean_cache_dir() -> None:
    """Empty the level cache directory and the Django cache of parsed levels."""
    if cache_dir.exists():
        shutil.rmtree(cache_dir)
    cache_dir.mkdir(parents=True)
    caches[settings.cache].clear()
