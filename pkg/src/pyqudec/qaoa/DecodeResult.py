from typing import Optional
from dataclasses import dataclass

from numpy.typing import NDArray
from numpy import uint8

from pyqudec.qaoa.AnsatzParams import AnsatzParams


@dataclass(frozen=True, eq=False)
class DecodeResult:
    solution_bits: NDArray[uint8]
    data_bits: NDArray[uint8]
    codeword_bits: NDArray[uint8]
    energy: float
    normalized_energy: Optional[float]
    expected_energy: float
    normalized_expected_energy: Optional[float]
    iterations_used: int
    params_final: AnsatzParams
    converged: bool
