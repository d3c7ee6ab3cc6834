"""Exception hierarchy shared by every module of the package."""


class ArgshiftError(Exception):
    """Base class; ``kind`` is the machine-readable tag used by the CLI."""

    kind = "error"


class UnsupportedType(ArgshiftError, ValueError):
    kind = "unsupported type"


class NotARoot(ArgshiftError, ValueError):
    kind = "not a root"


class DimensionMismatch(ArgshiftError, ValueError):
    kind = "dimension mismatch"


class BasisMismatch(ArgshiftError, ValueError):
    kind = "basis mismatch"


class NonLinearInput(ArgshiftError, ValueError):
    kind = "nonlinear input"


class InhomogeneousInput(ArgshiftError, ValueError):
    kind = "inhomogeneous input"


class InvalidParameter(ArgshiftError, ValueError):
    kind = "invalid parameter"


class NonRegularError(ArgshiftError, ValueError):
    """Raised for a Cartan element annihilated by some positive root."""

    kind = "non-regular mu"

    def __init__(self, message, root=None):
        super().__init__(message)
        self.root = root


class NotInSpan(ArgshiftError, ValueError):
    kind = "not in span"


class SignConsistencyError(ArgshiftError, RuntimeError):
    kind = "sign consistency"


class InvariantBookkeepingError(ArgshiftError, RuntimeError):
    kind = "invariant bookkeeping"


class CommutativityError(ArgshiftError, RuntimeError):
    kind = "non-commuting generators"


class DependentGenerators(ArgshiftError, RuntimeError):
    kind = "dependent generators"


class RetryExhausted(ArgshiftError, RuntimeError):
    """Every sampled parameter failed; ``report`` carries the last attempt."""

    kind = "retry exhaustion"

    def __init__(self, message, report=None, offending=None):
        super().__init__(message)
        self.report = report
        self.offending = offending or []
