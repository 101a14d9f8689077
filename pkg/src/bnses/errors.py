"""Exception hierarchy shared by the algebra, the dataset format and the CLI."""


class BNSESError(Exception):
    """Base class for every error raised by this package."""

    category = "error"


class DomainError(BNSESError, ValueError):
    """An argument lies outside the domain of an operation.

    Raised for out-of-range membership components, non-positive or
    non-finite exponents and malformed value literals.
    """

    category = "domain"


class ValidationError(BNSESError, ValueError):
    """A dataset violates one of its structural or range invariants."""

    category = "validation"

    def __init__(self, message, location=None):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)


class ParseError(ValidationError):
    """The dataset text is not syntactically well formed."""

    category = "parse"

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        location = None
        if line is not None:
            location = f"line {line}, column {column}"
        super().__init__(message, location)
