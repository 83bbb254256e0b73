"""Exception types shared across the package."""


class DblCatError(Exception):
    """Base class; carries an optional machine-readable witness."""

    def __init__(self, message="", witness=None):
        super().__init__(message)
        self.witness = witness


class MalformedInput(DblCatError):
    pass


class UnknownCell(DblCatError):
    pass


class NonComposable(DblCatError):
    pass


class KindMismatch(DblCatError):
    pass


class NotEnumerable(DblCatError):
    pass


class Invalid2Category(DblCatError):
    pass


class BoundaryMismatch(DblCatError):
    pass


class ShapeMismatch(DblCatError):
    pass


class VarianceMismatch(DblCatError):
    pass


class ElementNotFound(DblCatError):
    pass


class SearchBudgetExceeded(DblCatError):
    pass


class InvalidAdjunction(DblCatError):
    pass


class InvalidLocalBijection(DblCatError):
    pass


class NotUniversal(DblCatError):
    pass


class IncompatibleFunctors(DblCatError):
    pass


class InvalidHAdjunction(DblCatError):
    pass


class NotFullyFaithful(DblCatError):
    pass


class CyclicGraph(DblCatError):
    pass


class InvalidCofolding(DblCatError):
    pass


class BackendMismatch(DblCatError):
    pass
