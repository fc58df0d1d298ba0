"""Exception hierarchy.

The CLI maps these onto exit codes: :class:`StructuralError` subclasses exit
with 2, :class:`NotPerfect` with 3, anything else with 1.
"""


class DQError(Exception):
    """Base class for every error raised by the package."""


class StructuralError(DQError, ValueError):
    """Input rejected because it lacks a required structure."""


class ZeroQuaternion(DQError, ZeroDivisionError):
    pass


class NotAppreciable(DQError, ValueError):
    pass


class NoDualRoot(DQError, ValueError):
    pass


class NegativeInput(DQError, ValueError):
    pass


class DimensionMismatch(StructuralError):
    pass


class NotHermitian(StructuralError):
    pass


class NotPartiallyUnitary(StructuralError):
    pass


class NotPSD(StructuralError):
    pass


class SpectrumNotSimple(StructuralError):
    pass


class BadRank(StructuralError):
    pass


class BadDimensions(StructuralError):
    pass


class ParseError(StructuralError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DimensionError(ParseError):
    pass


class NotPerfect(DQError, ValueError):
    """PSD Hermitian matrix without a PSD Hermitian square root."""


class CompletionFailure(DQError, ArithmeticError):
    pass


class KernelFailure(DQError, ArithmeticError):
    pass


class NoConvergence(KernelFailure):
    pass


class InternalAssertion(DQError, AssertionError):
    """A theorem-backed identity failed numerically; indicates a bug."""


class EigenpairFailure(DQError, ArithmeticError):
    """Raised by :func:`~dqspectra.spectral.verify_eigenpair`; carries the report."""

    def __init__(self, message, report):
        super().__init__(message)
        self.report = report
