"""Exception hierarchy.

The CLI maps these onto exit codes, so each family stays distinct.
"""


class ModforgeError(Exception):
    pass


class SpecError(ModforgeError, ValueError):
    """Malformed input document or ring/module specification."""


class RingAxiomError(SpecError):
    """A structure-constant table violates a ring axiom."""

    def __init__(self, message, triple=None):
        super().__init__(message)
        self.triple = triple


class CapExceeded(ModforgeError):
    """An enumeration would exceed a configured bound."""


class PreconditionError(ModforgeError, ValueError):
    pass


class NotLocalError(PreconditionError):
    pass


class NotPrincipalError(PreconditionError):
    pass


class AnnihilatorError(PreconditionError):
    """m*I is nonzero where it is required to vanish."""


class NotNilpotentError(PreconditionError):
    pass


class AlreadyFreeError(PreconditionError):
    pass


class RingMismatchError(PreconditionError):
    pass


class InvariantViolation(ModforgeError, AssertionError):
    """A mathematically guaranteed identity failed: an implementation bug."""


class PipelineError(ModforgeError):
    """Wraps an error raised inside a named pipeline stage."""

    def __init__(self, stage, cause):
        super().__init__(f"{stage}: {cause}")
        self.stage = stage
        self.cause = cause
