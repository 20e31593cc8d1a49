"""Exception types. All derive from ``GbsError`` (itself a ``ValueError``)."""


class GbsError(ValueError):
    pass


class InvalidDimensionError(GbsError):
    pass


class UndefinedGcdError(GbsError):
    pass


class InvalidCoordinateError(GbsError):
    pass


class SetParseError(GbsError):
    pass


class EmptyDifferenceError(GbsError):
    pass


class InvalidMcsIndexError(GbsError):
    pass


class AmbiguousMembershipError(GbsError):
    pass


class InvalidConfigError(GbsError):
    pass


class OracleError(GbsError):
    """Base for failures inside the numerical verification layer."""


class OracleDimensionError(OracleError):
    pass


class DegeneracyError(OracleError):
    pass


class WrongBranchError(OracleError):
    pass
