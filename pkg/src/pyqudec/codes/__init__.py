from typing import List

from .Gf2 import Gf2
from .FecCode import FecCode
from .LdpcCode import LdpcCode
from .PolarCode import PolarCode
from .BenchmarkCodes import BenchmarkCodes
from .GeneratorMatrix import GeneratorMatrix
from .PolarCodeConfig import PolarCodeConfig
from .ParityCheckMatrix import ParityCheckMatrix

__all__: List[str] = [
    'Gf2',
    'FecCode',
    'LdpcCode',
    'PolarCode',
    'BenchmarkCodes',
    'GeneratorMatrix',
    'PolarCodeConfig',
    'ParityCheckMatrix',
]
