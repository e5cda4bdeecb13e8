"""Exception types shared across the package."""


class UserInputError(ValueError):
    """Malformed or out-of-range input supplied by the caller."""


class DefectError(RuntimeError):
    """A computed object violated a property the mathematics guarantees.

    ``witness`` carries the offending data so it can be reported.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
