from typing import List, Tuple

from numpy.typing import NDArray
from numpy import float64, triu, flatnonzero, count_nonzero

from pyqudec.qsim.Circuit import Circuit
from pyqudec.qubo.IsingModel import IsingModel
from pyqudec.qaoa.AnsatzParams import AnsatzParams


class AnsatzBuilder:
    """
    Layer l of the circuit: RZ(2 gamma_l h_i) per nonzero field, CNOT(i, j) RZ(2 gamma_l J_ij) on j
    CNOT(i, j) per nonzero coupling i < j, then RX(2 beta_l) on every qubit. With the ``plus``
    initial state this prepares prod_l exp(-i beta_l B) exp(-i gamma_l (C - constant)) |+>^n.
    """

    @staticmethod
    def couplings(ising: IsingModel) -> List[Tuple[int, int, float]]:
        upper: NDArray[float64] = triu(ising.j, k=1)
        return [(int(a), int(b), float(upper[a, b])) for a, b in zip(*upper.nonzero())]

    @classmethod
    def build(
            cls,
            ising: IsingModel,
            params: AnsatzParams,
            initial_plus: bool = True
    ) -> Circuit:
        circuit: Circuit = Circuit(n_qubits=ising.n, initial_state='plus' if initial_plus else 'zero')
        fields: List[int] = [int(qubit) for qubit in flatnonzero(ising.h)]
        couplings: List[Tuple[int, int, float]] = cls.couplings(ising=ising)

        for gamma, beta in zip(params.gammas, params.betas):
            for qubit in fields:
                circuit.rz(qubit=qubit, angle=2 * gamma * ising.h[qubit])
            for control, target, coupling in couplings:
                circuit.cnot(control=control, target=target)
                circuit.rz(qubit=target, angle=2 * gamma * coupling)
                circuit.cnot(control=control, target=target)
            for qubit in range(ising.n):
                circuit.rx(qubit=qubit, angle=2 * beta)
        return circuit

    @staticmethod
    def gates_per_layer(ising: IsingModel) -> int:
        return ising.n + int(count_nonzero(ising.h)) + 3 * int(count_nonzero(triu(ising.j, k=1)))
