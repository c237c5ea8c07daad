"""Exception hierarchy shared by every module."""


class BestMonoError(Exception):
    """Base class for all package errors."""


class ParseError(BestMonoError, ValueError):
    pass


class NotGraphical(BestMonoError, ValueError):
    pass


class LengthMismatch(BestMonoError, ValueError):
    pass


class DegreeOutOfRange(BestMonoError, ValueError):
    pass


class ParamOutOfDomain(BestMonoError, ValueError):
    pass


class SequenceTooShort(BestMonoError, ValueError):
    pass


class ScaleExceeded(BestMonoError, RuntimeError):
    """An exhaustive search was asked to run above its configured vertex limit."""


class ParamOutOfRange(BestMonoError, ValueError):
    pass


class EmptyPart(BestMonoError, ValueError):
    """A witness recipe would need a part with negative (or forbidden zero) size."""
