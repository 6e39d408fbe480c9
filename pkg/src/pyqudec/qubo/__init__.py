from typing import List

from .Qubo import Qubo
from .IsingModel import IsingModel
from .QuboBuilder import QuboBuilder
from .VariableRole import VariableRole
from .LdpcQuboBuilder import LdpcQuboBuilder
from .BruteForceSolver import BruteForceSolver
from .PolarQuboBuilder import PolarQuboBuilder
from .CoefficientSpread import CoefficientSpread

__all__: List[str] = [
    'Qubo',
    'IsingModel',
    'QuboBuilder',
    'VariableRole',
    'LdpcQuboBuilder',
    'BruteForceSolver',
    'PolarQuboBuilder',
    'CoefficientSpread',
]
