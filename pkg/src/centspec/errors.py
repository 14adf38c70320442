"""Exception types shared across the package."""


class CentspecError(Exception):
    pass


class InvalidParams(CentspecError, ValueError):
    pass


class AbelianGroup(CentspecError):
    pass


class NotCliqueUnion(CentspecError):
    pass


class MissingZero(CentspecError, ValueError):
    pass


class DimensionMismatch(CentspecError, ValueError):
    pass


class BudgetExceeded(CentspecError):
    pass
