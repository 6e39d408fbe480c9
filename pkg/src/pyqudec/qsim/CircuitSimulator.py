from math import cos, sin
from typing import Optional, Sequence

from numpy.typing import NDArray
from numpy import complex128, int64, array, arange, exp, eye, trace, tensordot, moveaxis, multiply, ascontiguousarray

from pyqudec.qsim.Gate import Gate
from pyqudec.qsim.Circuit import Circuit
from pyqudec.qsim.GateKind import GateKind
from pyqudec.qsim.NoiseModel import NoiseModel
from pyqudec.qsim.StateVector import StateVector
from pyqudec.qsim.DensityMatrix import DensityMatrix
from pyqudec.errors import SizeLimit, DimensionMismatch


class CircuitSimulator:
    DEFAULT_MAX_STATEVECTOR_QUBITS: int = 20
    DEFAULT_MAX_DENSITY_QUBITS: int = 8

    __max_statevector_qubits: int
    __max_density_qubits: int

    def __init__(
            self,
            max_statevector_qubits: int = DEFAULT_MAX_STATEVECTOR_QUBITS,
            max_density_qubits: int = DEFAULT_MAX_DENSITY_QUBITS
    ) -> None:
        self.__max_statevector_qubits = max_statevector_qubits
        self.__max_density_qubits = max_density_qubits

    @property
    def max_statevector_qubits(self) -> int:
        return self.__max_statevector_qubits

    @property
    def max_density_qubits(self) -> int:
        return self.__max_density_qubits

    @staticmethod
    def rx_matrix(angle: float) -> NDArray[complex128]:
        c: float = cos(angle / 2)
        s: float = sin(angle / 2)
        return array([[c, -1j * s], [-1j * s, c]], dtype=complex128)

    @staticmethod
    def rz_matrix(angle: float) -> NDArray[complex128]:
        return array([[exp(-0.5j * angle), 0], [0, exp(0.5j * angle)]], dtype=complex128)

    @staticmethod
    def apply_single_qubit(
            values: NDArray[complex128],
            matrix: NDArray[complex128],
            qubit: int,
            n_qubits: int
    ) -> NDArray[complex128]:
        trailing = values.shape[1:]
        tensor: NDArray[complex128] = values.reshape((2,) * n_qubits + trailing)
        axis: int = n_qubits - 1 - qubit
        tensor = moveaxis(tensordot(matrix, tensor, axes=([1], [axis])), 0, axis)
        return ascontiguousarray(tensor).reshape(values.shape)

    @staticmethod
    def cnot_permutation(control: int, target: int, n_qubits: int) -> NDArray[int64]:
        index: NDArray[int64] = arange(2 ** n_qubits, dtype=int64)
        return index ^ (((index >> control) & 1) << target)

    @classmethod
    def apply_gate(
            cls,
            values: NDArray[complex128],
            gate: Gate,
            n_qubits: int
    ) -> NDArray[complex128]:
        match gate.kind:
            case GateKind.RX:
                return cls.apply_single_qubit(values, cls.rx_matrix(gate.angle), gate.qubits[0], n_qubits)
            case GateKind.RZ:
                return cls.apply_single_qubit(values, cls.rz_matrix(gate.angle), gate.qubits[0], n_qubits)
            case GateKind.CNOT:
                return values[cls.cnot_permutation(gate.qubits[0], gate.qubits[1], n_qubits)]
            case _:
                raise ValueError(f'Gate kind {gate.kind} not supported')

    @staticmethod
    def depolarize(
            rho: NDArray[complex128],
            qubits: Sequence[int],
            rate: float,
            n_qubits: int
    ) -> NDArray[complex128]:
        """rho -> (1 - p) rho + p (I / 2^|S| (x) tr_S rho) for the qubit subset S."""
        if rate == 0.0:
            return rho

        tensor: NDArray[complex128] = rho.reshape((2,) * (2 * n_qubits))
        for qubit in qubits:
            row: int = n_qubits - 1 - qubit
            column: int = 2 * n_qubits - 1 - qubit
            reduced: NDArray[complex128] = trace(tensor, axis1=row, axis2=column)
            tensor = moveaxis(multiply.outer(reduced, eye(2) / 2), [-2, -1], [row, column])

        replaced: NDArray[complex128] = ascontiguousarray(tensor).reshape(rho.shape)
        return (1.0 - rate) * rho + rate * replaced

    def __initial_statevector(self, circuit: Circuit) -> StateVector:
        match circuit.initial_state:
            case 'plus':
                return StateVector.plus(n_qubits=circuit.n_qubits)
            case _:
                return StateVector.zero(n_qubits=circuit.n_qubits)

    def run_statevector(self, circuit: Circuit, initial: Optional[StateVector] = None) -> StateVector:
        if circuit.n_qubits > self.__max_statevector_qubits:
            raise SizeLimit(f'{circuit.n_qubits} qubits exceed the statevector cap of {self.__max_statevector_qubits}')
        state: StateVector = self.__initial_statevector(circuit=circuit) if initial is None else initial
        if state.n_qubits != circuit.n_qubits:
            raise DimensionMismatch(f'{state.n_qubits}-qubit state for a {circuit.n_qubits}-qubit circuit')

        amplitudes: NDArray[complex128] = state.amplitudes.copy()
        for gate in circuit.gates:
            amplitudes = self.apply_gate(values=amplitudes, gate=gate, n_qubits=circuit.n_qubits)
        return StateVector(amplitudes=amplitudes)

    def run_density(
            self,
            circuit: Circuit,
            noise: NoiseModel = NoiseModel(),
            initial: Optional[DensityMatrix] = None
    ) -> DensityMatrix:
        n: int = circuit.n_qubits
        if n > self.__max_density_qubits:
            raise SizeLimit(f'{n} qubits exceed the density-matrix cap of {self.__max_density_qubits}')
        if initial is None:
            initial = DensityMatrix.from_state(state=self.__initial_statevector(circuit=circuit))
        if initial.n_qubits != n:
            raise DimensionMismatch(f'{initial.n_qubits}-qubit state for a {n}-qubit circuit')

        rho: NDArray[complex128] = initial.rho.copy()
        for gate in circuit.gates:
            rho = self.apply_gate(values=rho, gate=gate, n_qubits=n)
            rho = self.apply_gate(values=rho.conj().T, gate=gate, n_qubits=n).conj().T

            match gate.kind:
                case GateKind.RX:
                    rho = self.depolarize(rho=rho, qubits=gate.qubits, rate=noise.p1, n_qubits=n)
                case GateKind.CNOT:
                    rho = self.depolarize(rho=rho, qubits=gate.qubits, rate=noise.p2, n_qubits=n)

        return DensityMatrix(rho=rho)
