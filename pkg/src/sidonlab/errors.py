"""Exception types shared across the package."""


class SidonlabError(Exception):
    """Base class for all package-specific errors."""


class NotPrimeError(SidonlabError, ValueError):
    pass


class FieldTooLargeError(SidonlabError, ValueError):
    pass


class DivisionByZeroError(SidonlabError, ZeroDivisionError):
    pass


class ExtensionFieldUnsupportedError(SidonlabError, ValueError):
    pass


class DuplicateElementError(SidonlabError, ValueError):
    pass


class SetTooLargeError(SidonlabError, ValueError):
    pass


class OracleError(SidonlabError, RuntimeError):
    """An equivalence oracle raised or misbehaved; carries the offending pairs."""

    def __init__(self, message, pairs=None):
        super().__init__(message)
        self.pairs = pairs


class InvalidCurveError(SidonlabError, ValueError):
    pass


class EvenCharacteristicError(InvalidCurveError):
    pass


class NotSquarefreeError(InvalidCurveError):
    pass


class BadDegreeError(InvalidCurveError):
    pass


class NotMonicError(InvalidCurveError):
    pass


class GenusUnsupportedError(SidonlabError, ValueError):
    pass


class InconsistentCenterError(SidonlabError, RuntimeError):
    pass


class NotAGroupError(SidonlabError, ValueError):
    pass


class InvalidSeedError(SidonlabError, ValueError):
    pass


class ZeroFormError(SidonlabError, ValueError):
    pass


class SingularCurveError(SidonlabError, ValueError):
    """Raised when a plane-quartic constructor is given a singular form."""

    def __init__(self, message, evidence=None):
        super().__init__(message)
        self.evidence = evidence


class PointNotOnCurveError(SidonlabError, ValueError):
    pass


class InternalMultiplicityError(SidonlabError, RuntimeError):
    pass
