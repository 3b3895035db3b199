class RelbellError(Exception):
    """Base class for errors raised by relbell."""


class DomainError(RelbellError, ValueError):
    """An argument lies outside the physical or mathematical domain."""


class InconsistencyError(RelbellError, ArithmeticError):
    """A computed quantity failed an internal consistency check."""


class ConvergenceError(RelbellError):
    """An iterative procedure did not converge."""


class NoCrossingError(RelbellError):
    """The Czachor CHSH curve never reaches |C| = 2 on the scanned range."""
