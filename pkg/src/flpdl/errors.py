"""Exception types shared across the package."""

from __future__ import annotations


class FLPDLError(Exception):
    """Base class for all library-specific errors."""


class InvalidAlgebra(FLPDLError):
    """The submitted tables do not define an FL-algebra.

    `witness` holds the first offending tuple of element indices, if any.
    """

    def __init__(self, message: str, witness: tuple | None = None):
        super().__init__(message if witness is None else f"{message} (witness {witness})")
        self.witness = witness


class NotALattice(InvalidAlgebra):
    pass


class NotAMonoid(InvalidAlgebra):
    pass


class NotResiduated(InvalidAlgebra):
    pass


class DimensionMismatch(FLPDLError):
    """Relations or models built over incompatible sizes or algebras."""


class FormulaSyntaxError(FLPDLError):
    """Unparseable formula or action text. `position` is a 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownConstant(FLPDLError):
    """A constant token names no element of the ambient algebra."""


class UnknownAtom(FLPDLError):
    """Strict-mode evaluation hit an action atom the frame does not map."""


class NotClosed(FLPDLError):
    """A formula list handed to filtration is not closed."""


class AtomBudgetExceeded(FLPDLError):
    """log_consequence would need more assignment evaluations than allowed."""


class BudgetExceeded(FLPDLError):
    """Bounded search ran out of its model budget before finishing.

    `frontier` records how far the enumeration got: a dict with the state
    count being processed, the index of the next candidate at that state
    count, and the total number of models checked.
    """

    def __init__(self, message: str, frontier: dict):
        super().__init__(message)
        self.frontier = frontier
