from abc import ABC, abstractmethod

from numpy.typing import NDArray
from numpy import float64


class QuantumState(ABC):
    """Basis index convention shared by every state: qubit k is bit k of the index, qubit 0 least significant."""

    @property
    @abstractmethod
    def n_qubits(self) -> int:
        ...

    @abstractmethod
    def probabilities(self) -> NDArray[float64]:
        ...

    @property
    def dimension(self) -> int:
        return 2 ** self.n_qubits
