class DimensionMismatch(ValueError):
    """Matrix shape does not agree with the declared subsystem dimensions."""


class NonFiniteEntries(ValueError):
    """A matrix contains NaN or Inf."""


class NotHermitian(ValueError):
    """An operator handed to the Hermitian eigensolver is not Hermitian within tolerance."""


class NotUnitary(ValueError):
    """A local operator is not unitary within tolerance."""


class InvariantViolation(ValueError):
    """A density matrix failed its Hermitian, trace or positivity check."""


class ParamOutOfRange(ValueError):
    """A family parameter lies outside its allowed domain."""


class NoSignChange(ValueError):
    """Bisection endpoints give the same verdict."""


class EmptyRecords(ValueError):
    """A sweep produced no records to summarize or write."""
