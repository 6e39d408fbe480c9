from typing import List

from .QubitRow import QubitRow
from .Topology import Topology
from .PpsScenario import PpsScenario
from .ResourceStudy import ResourceStudy
from .ResourceParams import ResourceParams
from .GateDurationRow import GateDurationRow
from .ResourceEstimator import ResourceEstimator

__all__: List[str] = [
    'QubitRow',
    'Topology',
    'PpsScenario',
    'ResourceStudy',
    'ResourceParams',
    'GateDurationRow',
    'ResourceEstimator',
]
