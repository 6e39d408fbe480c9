from math import sqrt

from numpy.typing import NDArray
from numpy import complex128, float64, int64, full, exp

from pyqudec.qubo.Qubo import Qubo
from pyqudec.qsim.Circuit import Circuit
from pyqudec.errors import SizeLimit
from pyqudec.qubo.IsingModel import IsingModel
from pyqudec.qsim.StateVector import StateVector
from pyqudec.qsim.QuantumState import QuantumState
from pyqudec.qsim.StateSampler import StateSampler
from pyqudec.qaoa.AnsatzParams import AnsatzParams
from pyqudec.qaoa.AnsatzBuilder import AnsatzBuilder
from pyqudec.qsim.CircuitSimulator import CircuitSimulator
from pyqudec.qaoa.SimulationBackend import SimulationBackend


class QaoaObjective:
    __qubo: Qubo
    __ising: IsingModel
    __backend: SimulationBackend
    __simulator: CircuitSimulator
    __costs: NDArray[float64]
    __phases: NDArray[float64]

    def __init__(
            self,
            qubo: Qubo,
            backend: SimulationBackend = SimulationBackend(),
            simulator: CircuitSimulator = CircuitSimulator()
    ) -> None:
        cap: int = simulator.max_density_qubits if backend.kind == 'noisy' else simulator.max_statevector_qubits
        if qubo.n_vars > cap:
            raise SizeLimit(f'{qubo.n_vars}-variable QUBO exceeds the {backend.kind} simulator cap of {cap}')

        self.__qubo = qubo
        self.__ising = qubo.to_ising()
        self.__backend = backend
        self.__simulator = simulator
        self.__costs = qubo.cost_vector()
        self.__phases = self.__ising.energy_vector(include_constant=False)

    @property
    def qubo(self) -> Qubo:
        return self.__qubo

    @property
    def backend(self) -> SimulationBackend:
        return self.__backend

    @property
    def costs(self) -> NDArray[float64]:
        return self.__costs

    def circuit(self, params: AnsatzParams) -> Circuit:
        return AnsatzBuilder.build(ising=self.__ising, params=params, initial_plus=True)

    def statevector(self, params: AnsatzParams) -> StateVector:
        n: int = self.__qubo.n_vars
        amplitudes: NDArray[complex128] = full(2 ** n, 1 / sqrt(2 ** n), dtype=complex128)
        for gamma, beta in zip(params.gammas, params.betas):
            amplitudes = amplitudes * exp(-1j * gamma * self.__phases)
            mixer: NDArray[complex128] = CircuitSimulator.rx_matrix(angle=2 * beta)
            for qubit in range(n):
                amplitudes = CircuitSimulator.apply_single_qubit(
                    values=amplitudes, matrix=mixer, qubit=qubit, n_qubits=n
                )
        return StateVector(amplitudes=amplitudes)

    def state(self, params: AnsatzParams) -> QuantumState:
        match self.__backend.kind:
            case 'noisy':
                return self.__simulator.run_density(circuit=self.circuit(params=params), noise=self.__backend.noise)
            case _:
                return self.statevector(params=params)

    def expectation(self, state: QuantumState) -> float:
        match self.__backend.kind:
            case 'sampled':
                indices: NDArray[int64] = StateSampler.sample_indices(
                    state=state, n_shots=self.__backend.n_shots, seed=self.__backend.seed
                )
                return float(self.__costs[indices].mean())
            case _:
                return float(state.probabilities() @ self.__costs)

    def evaluate(self, params: AnsatzParams) -> float:
        return self.expectation(state=self.state(params=params))

    def __call__(self, params: AnsatzParams) -> float:
        return self.evaluate(params=params)
