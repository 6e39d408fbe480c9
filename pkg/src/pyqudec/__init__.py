from typing import List
from . import errors, codes, channel, qubo, qsim, qaoa, classical, resources, engine

__all__: List[str] = [
    'errors',
    'codes',
    'channel',
    'qubo',
    'qsim',
    'qaoa',
    'classical',
    'resources',
    'engine',
]
