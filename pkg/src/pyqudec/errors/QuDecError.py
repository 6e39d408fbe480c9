class QuDecError(Exception):
    pass


class RankDeficient(QuDecError, ValueError):
    pass


class LengthMismatch(QuDecError, ValueError):
    pass


class DimensionMismatch(QuDecError, ValueError):
    pass


class SizeLimit(QuDecError):
    pass


class WeightTooSmall(QuDecError, ValueError):
    pass


class EmptyInput(QuDecError, ValueError):
    pass


class NoPreamble(QuDecError):
    pass


class UnsupportedFamily(QuDecError, ValueError):
    pass


class MissingColumns(QuDecError):
    pass


class InvalidParameter(QuDecError, ValueError):
    pass


class ConfigError(QuDecError):
    pass
