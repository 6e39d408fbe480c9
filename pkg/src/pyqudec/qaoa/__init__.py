from typing import List

from .ZeroInit import ZeroInit
from .RandomInit import RandomInit
from .QaoaDecoder import QaoaDecoder
from .WarmStarter import WarmStarter
from .TemporalInit import TemporalInit
from .DecodeResult import DecodeResult
from .InitStrategy import InitStrategy
from .AnsatzParams import AnsatzParams
from .QaoaObjective import QaoaObjective
from .AnsatzBuilder import AnsatzBuilder
from .OptimizerConfig import OptimizerConfig
from .SimulationBackend import SimulationBackend
from .SolutionExtractor import SolutionExtractor
from .ParameterOptimizer import ParameterOptimizer, BudgetExhausted
from .OptimizationOutcome import OptimizationOutcome

__all__: List[str] = [
    'ZeroInit',
    'RandomInit',
    'QaoaDecoder',
    'WarmStarter',
    'TemporalInit',
    'DecodeResult',
    'InitStrategy',
    'AnsatzParams',
    'QaoaObjective',
    'AnsatzBuilder',
    'OptimizerConfig',
    'BudgetExhausted',
    'SimulationBackend',
    'SolutionExtractor',
    'ParameterOptimizer',
    'OptimizationOutcome',
]
