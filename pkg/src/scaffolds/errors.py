"""Exception types shared across the package."""


class ScaffoldError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(ScaffoldError, ValueError):
    """Malformed or mis-shaped arguments."""


class ValidationError(ScaffoldError, ValueError):
    """A structure failed one or more of its defining checks.

    ``violations`` holds ``(tag, detail)`` pairs, e.g. ``("AS4", "A_1 A_2 ...")``.
    """

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [("invalid", violations)]
        self.violations = list(violations)
        msg = "; ".join(f"{tag}: {detail}" for tag, detail in self.violations)
        super().__init__(msg)

    @property
    def tags(self):
        return [tag for tag, _ in self.violations]


class UnsupportedOperation(ScaffoldError):
    """The operation needs data or structure the argument does not carry."""


class InvalidRewrite(ScaffoldError, ValueError):
    """A diagram rewrite was requested where its precondition fails."""


class ResourceLimit(ScaffoldError):
    """A dense tensor would exceed the configured entry cap."""

    def __init__(self, msg, size=None):
        super().__init__(msg)
        self.size = size
