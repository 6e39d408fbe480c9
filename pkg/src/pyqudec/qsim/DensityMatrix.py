from numpy.typing import NDArray
from numpy import complex128, float64, array, outer, eye, trace, diag, allclose, clip

from pyqudec.errors import DimensionMismatch
from pyqudec.qsim.StateVector import StateVector
from pyqudec.qsim.QuantumState import QuantumState


class DensityMatrix(QuantumState):
    __rho: NDArray[complex128]
    __n_qubits: int

    def __init__(self, rho: NDArray) -> None:
        rho = array(rho, dtype=complex128)
        if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
            raise DimensionMismatch(f'Density matrix must be square, got shape {rho.shape}')
        n_qubits: int = rho.shape[0].bit_length() - 1
        if rho.shape[0] < 2 or 2 ** n_qubits != rho.shape[0]:
            raise DimensionMismatch(f'Density matrix shape {rho.shape} is not 2^n x 2^n')

        self.__rho = rho
        self.__rho.setflags(write=False)
        self.__n_qubits = n_qubits

    @classmethod
    def from_state(cls, state: StateVector) -> 'DensityMatrix':
        return cls(rho=outer(state.amplitudes, state.amplitudes.conj()))

    @classmethod
    def maximally_mixed(cls, n_qubits: int) -> 'DensityMatrix':
        return cls(rho=eye(2 ** n_qubits, dtype=complex128) / 2 ** n_qubits)

    @property
    def rho(self) -> NDArray[complex128]:
        return self.__rho

    @property
    def n_qubits(self) -> int:
        return self.__n_qubits

    @property
    def trace(self) -> float:
        return float(trace(self.__rho).real)

    def is_hermitian(self, tolerance: float = 1e-10) -> bool:
        return bool(allclose(self.__rho, self.__rho.conj().T, rtol=0.0, atol=tolerance))

    def probabilities(self) -> NDArray[float64]:
        return clip(diag(self.__rho).real, 0.0, None)
