from typing import List

from .Engine import Engine
from .Problem import Problem
from .SeedMixer import SeedMixer
from .RunRecord import RunRecord
from .ResultRow import ResultRow
from .SeedStream import SeedStream
from .BlockSource import BlockSource
from .AggregateRow import AggregateRow
from .FigureTables import FigureTables
from .ResultWriter import ResultWriter
from .ExperimentSpec import ExperimentSpec

__all__: List[str] = [
    'Engine',
    'Problem',
    'SeedMixer',
    'RunRecord',
    'ResultRow',
    'SeedStream',
    'BlockSource',
    'AggregateRow',
    'FigureTables',
    'ResultWriter',
    'ExperimentSpec',
]
