"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input violates a mathematical precondition."""


class ParseError(DomainError):
    """Malformed text input; ``position`` is the 0-based offset of the problem."""

    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
            if text:
                message += f"\n  {text}\n  {' ' * position}^"
        super().__init__(message)


class ResourceGuardError(RuntimeError):
    """A computation was refused because it exceeds a configured size limit."""
