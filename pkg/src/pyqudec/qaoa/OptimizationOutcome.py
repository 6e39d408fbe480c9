from typing import Tuple
from dataclasses import dataclass

from pyqudec.qaoa.AnsatzParams import AnsatzParams


@dataclass(frozen=True)
class OptimizationOutcome:
    params: AnsatzParams
    objective: float
    initial_objective: float
    evaluations: int
    converged: bool
    history: Tuple[float, ...]
