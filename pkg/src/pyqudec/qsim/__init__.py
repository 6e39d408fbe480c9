from typing import List

from .Gate import Gate
from .Circuit import Circuit
from .GateKind import GateKind
from .NoiseModel import NoiseModel
from .StateVector import StateVector
from .QuantumState import QuantumState
from .StateSampler import StateSampler
from .DensityMatrix import DensityMatrix
from .CircuitSimulator import CircuitSimulator

__all__: List[str] = [
    'Gate',
    'Circuit',
    'GateKind',
    'NoiseModel',
    'StateVector',
    'QuantumState',
    'StateSampler',
    'DensityMatrix',
    'CircuitSimulator',
]
