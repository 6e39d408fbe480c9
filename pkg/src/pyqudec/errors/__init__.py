from typing import List

from .QuDecError import (
    QuDecError,
    RankDeficient,
    LengthMismatch,
    DimensionMismatch,
    SizeLimit,
    WeightTooSmall,
    EmptyInput,
    NoPreamble,
    UnsupportedFamily,
    MissingColumns,
    InvalidParameter,
    ConfigError,
)

__all__: List[str] = [
    'QuDecError',
    'RankDeficient',
    'LengthMismatch',
    'DimensionMismatch',
    'SizeLimit',
    'WeightTooSmall',
    'EmptyInput',
    'NoPreamble',
    'UnsupportedFamily',
    'MissingColumns',
    'InvalidParameter',
    'ConfigError',
]
