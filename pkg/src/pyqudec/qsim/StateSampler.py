from numpy.typing import NDArray
from numpy.random import default_rng, Generator
from numpy import float64, int64, uint8, arange, asarray

from pyqudec.qubo.Qubo import Qubo
from pyqudec.qsim.QuantumState import QuantumState
from pyqudec.errors import DimensionMismatch, InvalidParameter


class StateSampler:
    @staticmethod
    def probabilities(state: QuantumState) -> NDArray[float64]:
        return state.probabilities()

    @staticmethod
    def expectation_diag(state: QuantumState, cost: Qubo) -> float:
        if cost.n_vars != state.n_qubits:
            raise DimensionMismatch(f'{cost.n_vars}-variable cost on a {state.n_qubits}-qubit state')
        return float(state.probabilities() @ cost.cost_vector())

    @staticmethod
    def sample_indices(state: QuantumState, n_shots: int, seed: int) -> NDArray[int64]:
        if n_shots < 1:
            raise InvalidParameter(f'Need at least one shot, got {n_shots}')
        probabilities: NDArray[float64] = state.probabilities()
        rng: Generator = default_rng(seed)
        return rng.choice(probabilities.size, size=n_shots, p=probabilities / probabilities.sum())

    @classmethod
    def sample_bitstrings(cls, state: QuantumState, n_shots: int, seed: int) -> NDArray[uint8]:
        indices: NDArray[int64] = asarray(cls.sample_indices(state=state, n_shots=n_shots, seed=seed), dtype=int64)
        return ((indices[:, None] >> arange(state.n_qubits, dtype=int64)[None, :]) & 1).astype(uint8)
