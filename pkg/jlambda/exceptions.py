from typing import Optional


class JLambdaError(Exception):
    pass


class NegativePowerResidue(JLambdaError, ArithmeticError):
    """A Laurent intermediate kept a negative power of q after finalizing."""


class InexactDivision(JLambdaError, ArithmeticError):
    """A division that must be exact left a denominator or a remainder."""


class GuardViolation(JLambdaError, ValueError):
    def __init__(self, guard: str, limit: int, value: int) -> None:
        super().__init__(f"{guard}={value} exceeds the resource guard limit {limit}")
        self.guard = guard
        self.limit = limit
        self.value = value


class EngineError(JLambdaError):
    def __init__(self, partition: str, cause: Exception) -> None:
        super().__init__(f"computing J_({partition}) failed: {cause}")
        self.partition = partition
        self.cause = cause


class LevelCacheError(JLambdaError):
    pass


class ChecksumMismatch(LevelCacheError):
    def __init__(self, name: str, expected: str, found: str) -> None:
        super().__init__(
            f"checksum of {name!r} is {found}, manifest records {expected}"
        )
        self.name = name


class FormatVersionUnsupported(LevelCacheError):
    pass


class IncompleteLevel(LevelCacheError):
    pass


class MissingLevel(LevelCacheError):
    def __init__(self, n: int, directory: Optional[str] = None) -> None:
        where = f" in {directory}" if directory else ""
        super().__init__(f"level {n} is not cached{where}")
        self.n = n


class CacheLocked(LevelCacheError):
    pass
