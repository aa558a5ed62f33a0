"""Exception types shared across the package."""


class CertificationError(ValueError):
    """A non-regular graph was offered for (n, d, lambda) certification."""


class GenerationError(RuntimeError):
    """A random sampler exhausted its restart budget."""


class ResourceBudgetError(RuntimeError):
    """An exhaustive enumeration exceeded its step budget."""


class NumericError(RuntimeError):
    """An eigensolve finished with residuals above the certified tolerance."""


class ExtractionError(RuntimeError):
    """The regularization process deleted every vertex."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace or []
