from dataclasses import dataclass

from numpy.typing import NDArray
from numpy import float64, int64, uint8, arange, lexsort, unique, zeros

from pyqudec.qsim.QuantumState import QuantumState
from pyqudec.qsim.StateSampler import StateSampler
from pyqudec.errors import InvalidParameter


@dataclass(frozen=True)
class SolutionExtractor:
    """
    Read the decoded assignment off a final state: the cheapest bitstring among the ``top_m`` most
    probable basis states (``exact``) or among ``n_shots`` samples (``sampled``). Probability ties go to
    the lower basis index, cost ties to the smallest bitstring with variable 0 most significant.
    """
    kind: str = 'exact'
    top_m: int = 128
    n_shots: int = 1024
    seed: int = 0
    probability_floor: float = 1e-15

    def __post_init__(self) -> None:
        if self.kind not in ('exact', 'sampled'):
            raise InvalidParameter(f'Extraction {self.kind!r} is neither exact nor sampled')
        if self.top_m < 1 or self.n_shots < 1:
            raise InvalidParameter('top_m and n_shots must be >= 1')

    @staticmethod
    def bits_of(index: int, n_vars: int) -> NDArray[uint8]:
        return ((index >> arange(n_vars, dtype=int64)) & 1).astype(uint8)

    @staticmethod
    def lexicographic_key(indices: NDArray[int64], n_vars: int) -> NDArray[int64]:
        key: NDArray[int64] = zeros(indices.size, dtype=int64)
        for variable in range(n_vars):
            key |= ((indices >> variable) & 1) << (n_vars - 1 - variable)
        return key

    def candidates(self, state: QuantumState) -> NDArray[int64]:
        match self.kind:
            case 'sampled':
                return unique(StateSampler.sample_indices(state=state, n_shots=self.n_shots, seed=self.seed))
            case _:
                probabilities: NDArray[float64] = state.probabilities()
                order: NDArray[int64] = lexsort((arange(probabilities.size), -probabilities))[:self.top_m]
                kept: NDArray[int64] = order[probabilities[order] > self.probability_floor]
                return kept if kept.size else order[:1]

    def extract(self, state: QuantumState, costs: NDArray[float64]) -> NDArray[uint8]:
        indices: NDArray[int64] = self.candidates(state=state).astype(int64)
        ranking: NDArray[int64] = lexsort((self.lexicographic_key(indices=indices, n_vars=state.n_qubits), costs[indices]))
        return self.bits_of(index=int(indices[ranking[0]]), n_vars=state.n_qubits)
