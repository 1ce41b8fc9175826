"""Exception hierarchy shared by every monoform module."""


class MonoformError(Exception):
    """Base class for all errors raised by monoform."""

    kind = "error"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "message": str(self)}


class DimensionError(MonoformError, ValueError):
    kind = "dimension"


class UndefinedInvariantError(MonoformError, ValueError):
    """Raised for the zero or unit ideal, where invariants are undefined."""

    kind = "undefined"


class SizeLimitError(MonoformError):
    """An intermediate generator set grew past the configured cap."""

    kind = "size"

    def __init__(self, operation: str, size: int, cap: int, m: int | None = None):
        self.operation = operation
        self.size = size
        self.cap = cap
        self.m = m
        msg = f"{operation}: generator set of size {size} exceeds cap {cap}"
        if m is not None:
            msg += f" (at m={m})"
        super().__init__(msg)

    def to_dict(self) -> dict:
        d = super().to_dict()
        d.update(operation=self.operation, size=self.size, cap=self.cap)
        if self.m is not None:
            d["m"] = self.m
        return d


class NotInBodyError(MonoformError, ValueError):
    kind = "not-in-body"


class IdealParseError(MonoformError, ValueError):
    kind = "parse"

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")

    def to_dict(self) -> dict:
        d = super().to_dict()
        d["position"] = self.position
        return d
