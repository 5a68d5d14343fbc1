"""Exception hierarchy shared by the library and the command line."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class PreconditionError(DomainError):
    """A named precondition of a factorization or decomposition failed.

    ``check`` is the short human-readable name of the failed check; the
    CLI prints it verbatim.
    """

    check = "precondition"

    def __init__(self, message=None):
        super().__init__(message or self.check)


class NonSplitError(PreconditionError):
    check = "non-split type"


class NotInDeltaError(PreconditionError):
    check = "not in Delta"


class NotIsotropicError(PreconditionError):
    check = "not isotropic"


class NotPrimitiveError(PreconditionError):
    check = "not primitive"


class NotIsometryError(PreconditionError):
    check = "not an isometry"


class DeltaNotPreservedError(PreconditionError):
    check = "Delta not preserved"
