"""Exception hierarchy shared by every module of the package."""


class NumerosityError(Exception):
    """Base class for all domain errors raised by this package."""


class ValidationError(NumerosityError, ValueError):
    """A raw event or value description is malformed."""


class ModelMismatchError(NumerosityError, TypeError):
    """Operands belong to different ground models (or different finite spaces)."""


class UnsupportedOperationError(NumerosityError):
    """The operation has no finite representation in the given model."""


class PreconditionError(NumerosityError, ValueError):
    """A documented precondition of an operation does not hold."""


class EmptyConditionError(PreconditionError):
    """Conditioning on the empty event."""


class InexactDivisionError(NumerosityError, ArithmeticError):
    """A quotient is not representable with finitely many terms."""


class SpecFileError(NumerosityError, ValueError):
    """A finite-model spec document could not be parsed or is inconsistent."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DSLError(NumerosityError, ValueError):
    """Positioned diagnostic from the event language (1-based line and column)."""

    def __init__(self, message, line=1, column=1, source=None):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        super().__init__(f"{line}:{column}: {message}")


class DSLSyntaxError(DSLError):
    def __init__(self, message, line=1, column=1, expected=(), source=None):
        self.expected = tuple(expected)
        if self.expected:
            message = f"{message}; expected {' or '.join(self.expected)}"
        super().__init__(message, line, column, source)


class DSLSemanticError(DSLError):
    pass
