from dataclasses import dataclass
from typing import Tuple

from pyqudec.qsim.GateKind import GateKind
from pyqudec.errors import InvalidParameter


@dataclass(frozen=True)
class Gate:
    kind: GateKind
    qubits: Tuple[int, ...]
    angle: float = 0.0

    def __post_init__(self) -> None:
        expected: int = 2 if self.kind is GateKind.CNOT else 1
        if len(self.qubits) != expected:
            raise InvalidParameter(f'{self.kind.value} acts on {expected} qubit(s), got {self.qubits}')
        if self.kind is GateKind.CNOT and self.qubits[0] == self.qubits[1]:
            raise InvalidParameter(f'CNOT control and target coincide on qubit {self.qubits[0]}')
        object.__setattr__(self, 'qubits', tuple(int(qubit) for qubit in self.qubits))
        object.__setattr__(self, 'angle', float(self.angle))

    @classmethod
    def rx(cls, qubit: int, angle: float) -> 'Gate':
        return cls(kind=GateKind.RX, qubits=(qubit,), angle=float(angle))

    @classmethod
    def rz(cls, qubit: int, angle: float) -> 'Gate':
        return cls(kind=GateKind.RZ, qubits=(qubit,), angle=float(angle))

    @classmethod
    def cnot(cls, control: int, target: int) -> 'Gate':
        return cls(kind=GateKind.CNOT, qubits=(control, target))

    def dumps(self) -> str:
        if self.kind is GateKind.CNOT:
            return f'CNOT {self.qubits[0]} {self.qubits[1]}'
        return f'{self.kind.value} {self.qubits[0]} {self.angle.hex()}'
