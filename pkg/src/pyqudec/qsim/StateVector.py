from math import sqrt

from numpy.typing import NDArray
from numpy import complex128, float64, array, zeros, full, abs as absolute, vdot

from pyqudec.errors import DimensionMismatch
from pyqudec.qsim.QuantumState import QuantumState


class StateVector(QuantumState):
    __amplitudes: NDArray[complex128]
    __n_qubits: int

    def __init__(self, amplitudes: NDArray) -> None:
        amplitudes = array(amplitudes, dtype=complex128).ravel()
        n_qubits: int = amplitudes.size.bit_length() - 1
        if amplitudes.size < 2 or 2 ** n_qubits != amplitudes.size:
            raise DimensionMismatch(f'State length {amplitudes.size} is not a power of two')

        self.__amplitudes = amplitudes
        self.__amplitudes.setflags(write=False)
        self.__n_qubits = n_qubits

    @classmethod
    def zero(cls, n_qubits: int) -> 'StateVector':
        return cls.basis(n_qubits=n_qubits, index=0)

    @classmethod
    def basis(cls, n_qubits: int, index: int) -> 'StateVector':
        amplitudes: NDArray[complex128] = zeros(2 ** n_qubits, dtype=complex128)
        amplitudes[index] = 1.0
        return cls(amplitudes=amplitudes)

    @classmethod
    def plus(cls, n_qubits: int) -> 'StateVector':
        return cls(amplitudes=full(2 ** n_qubits, 1 / sqrt(2 ** n_qubits), dtype=complex128))

    @property
    def amplitudes(self) -> NDArray[complex128]:
        return self.__amplitudes

    @property
    def n_qubits(self) -> int:
        return self.__n_qubits

    @property
    def norm(self) -> float:
        return sqrt(float(vdot(self.__amplitudes, self.__amplitudes).real))

    def probabilities(self) -> NDArray[float64]:
        return absolute(self.__amplitudes) ** 2

    def fidelity(self, other: 'StateVector') -> float:
        if other.n_qubits != self.__n_qubits:
            raise DimensionMismatch(f'{self.__n_qubits}-qubit and {other.n_qubits}-qubit states')
        return float(absolute(vdot(self.__amplitudes, other.amplitudes)) ** 2)
