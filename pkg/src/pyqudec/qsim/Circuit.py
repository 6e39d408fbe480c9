from pathlib import Path
from collections import Counter
from typing import Dict, Iterable, List, Tuple

from pyqudec.qsim.Gate import Gate
from pyqudec.qsim.GateKind import GateKind
from pyqudec.errors import ConfigError, InvalidParameter


class Circuit:
    INITIAL_STATES: Tuple[str, ...] = ('zero', 'plus')

    __n_qubits: int
    __gates: List[Gate]
    __initial_state: str

    def __init__(
            self,
            n_qubits: int,
            gates: Iterable[Gate] = (),
            initial_state: str = 'zero'
    ) -> None:
        if n_qubits < 1:
            raise InvalidParameter(f'A circuit needs at least one qubit, got {n_qubits}')
        if initial_state not in self.INITIAL_STATES:
            raise InvalidParameter(f'Initial state {initial_state!r} not in {self.INITIAL_STATES}')

        self.__n_qubits = n_qubits
        self.__gates = []
        self.__initial_state = initial_state
        for gate in gates:
            self.append(gate=gate)

    @property
    def n_qubits(self) -> int:
        return self.__n_qubits

    @property
    def gates(self) -> Tuple[Gate, ...]:
        return tuple(self.__gates)

    @property
    def initial_state(self) -> str:
        return self.__initial_state

    def append(self, gate: Gate) -> 'Circuit':
        if max(gate.qubits) >= self.__n_qubits or min(gate.qubits) < 0:
            raise InvalidParameter(f'Gate {gate.dumps()} addresses a qubit outside 0..{self.__n_qubits - 1}')
        self.__gates.append(gate)
        return self

    def rx(self, qubit: int, angle: float) -> 'Circuit':
        return self.append(gate=Gate.rx(qubit=qubit, angle=angle))

    def rz(self, qubit: int, angle: float) -> 'Circuit':
        return self.append(gate=Gate.rz(qubit=qubit, angle=angle))

    def cnot(self, control: int, target: int) -> 'Circuit':
        return self.append(gate=Gate.cnot(control=control, target=target))

    def gate_counts(self) -> Dict[GateKind, int]:
        return dict(Counter(gate.kind for gate in self.__gates))

    def dumps(self) -> str:
        """Header ``"n_qubits initial_state"``, then one gate per line; angles are hex floats."""
        return '\n'.join([f'{self.__n_qubits} {self.__initial_state}'] + [gate.dumps() for gate in self.__gates]) + '\n'

    @classmethod
    def loads(cls, text: str) -> 'Circuit':
        lines: List[List[str]] = [line.split() for line in text.splitlines() if line.strip()]
        if not lines:
            raise ConfigError('Empty circuit text')

        try:
            circuit: Circuit = cls(n_qubits=int(lines[0][0]), initial_state=lines[0][1] if len(lines[0]) > 1 else 'zero')
            for tokens in lines[1:]:
                match tokens:
                    case ['RX', qubit, angle]:
                        circuit.rx(qubit=int(qubit), angle=float.fromhex(angle))
                    case ['RZ', qubit, angle]:
                        circuit.rz(qubit=int(qubit), angle=float.fromhex(angle))
                    case ['CNOT', control, target]:
                        circuit.cnot(control=int(control), target=int(target))
                    case _:
                        raise ConfigError(f'Unknown gate line {" ".join(tokens)!r}')
        except ValueError as error:
            raise ConfigError(f'Malformed circuit text: {error}') from error
        return circuit

    def write(self, path: Path | str) -> None:
        Path(path).write_text(self.dumps(), encoding='utf-8')

    @classmethod
    def read(cls, path: Path | str) -> 'Circuit':
        return cls.loads(Path(path).read_text(encoding='utf-8'))

    def __len__(self) -> int:
        return len(self.__gates)
