class WeakClosureError(Exception):
    """Base class for every error raised by weak_closure."""


class ParseError(WeakClosureError, ValueError):
    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class DomainError(WeakClosureError, ValueError):
    pass


class ContractViolation(WeakClosureError):
    pass


class ParameterError(WeakClosureError, ValueError):
    pass


class ConfigurationError(WeakClosureError, LookupError):
    pass


class ResourceLimitError(WeakClosureError):
    def __init__(self, message: str, partial: dict | None = None):
        super().__init__(message)
        self.partial = partial or {}


class ScaleError(ResourceLimitError):
    pass
