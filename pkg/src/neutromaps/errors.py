"""Exception types shared by every layer.

Two families matter to callers: ``InputError`` (bad data or configuration,
CLI exit code 1) and ``EngineError`` (a computation that cannot proceed,
exit code 2).
"""


class NeutroError(Exception):
    """Base class for all errors raised by the package."""


class InputError(NeutroError, ValueError):
    pass


class EngineError(NeutroError):
    pass


class DimensionMismatch(InputError):
    pass


class ShapeMismatch(DimensionMismatch):
    pass


class DomainMismatch(InputError):
    pass


class EmptyPanel(InputError):
    pass


class ConfigError(InputError):
    pass


class TokenError(InputError):
    """A scalar token does not follow the grammar."""

    def __init__(self, token, column, reason="malformed scalar token"):
        self.token = token
        self.column = column
        super().__init__(f"{reason}: {token!r} (column {column})")


class DomainViolation(InputError):
    """An entry falls outside the declared value domain."""

    def __init__(self, position, value, domain=None, reason=None):
        self.position = position
        self.value = value
        self.domain = domain
        where = _where(position)
        if reason is None:
            reason = f"not in domain {domain}" if domain is not None else "not admissible"
        super().__init__(f"value {value} at {where} {reason}")


class NonZeroDiagonal(InputError):
    def __init__(self, index, value, member=None):
        self.index = index
        self.value = value
        self.member = member
        owner = f"{member}: " if member else ""
        super().__init__(f"{owner}diagonal entry ({index + 1},{index + 1}) is {value}, expected 0")


DiagonalNonZero = NonZeroDiagonal


class DocumentSyntaxError(InputError):
    def __init__(self, line, col, message):
        self.line = line
        self.col = col
        super().__init__(f"line {line}, col {col}: {message}")


class ShapeError(InputError):
    def __init__(self, row, message):
        self.row = row
        super().__init__(f"grid row {row}: {message}")


class IncomparableEntry(EngineError):
    """Two panel values cannot be ordered componentwise."""

    def __init__(self, position, values):
        self.position = position
        self.values = tuple(values)
        shown = ", ".join(str(v) for v in self.values)
        super().__init__(
            f"incomparable entries {{{shown}}} at {_where(position)} under the usual order; "
            "choose a pseudo order (pseudo-real or pseudo-neutro)"
        )


class IncomparableUnderUsual(IncomparableEntry):
    pass


class StackComponentError(NeutroError):
    """Wraps a failure in one component of an n-matrix stack."""

    def __init__(self, index, cause):
        self.index = index
        self.cause = cause
        super().__init__(f"stack component {index + 1}: {cause}")


def _where(position):
    if position is None:
        return "unknown position"
    if isinstance(position, tuple):
        return "(" + ",".join(str(p + 1) for p in position) + ")"
    return f"index {position + 1}"
