"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Malformed text input. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BudgetExceeded(RuntimeError):
    """A search ran past its node budget without reaching an answer."""

    def __init__(self, nodes: int, what: str = "search"):
        self.nodes = nodes
        super().__init__(f"{what}: budget exceeded after {nodes} nodes")


class InvariantViolation(AssertionError):
    """A structural guarantee failed; indicates a bug rather than bad input."""


class PreconditionError(ValueError):
    """Caller-supplied data violates an operation's contract."""
