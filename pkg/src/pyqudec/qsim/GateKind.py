from enum import Enum


class GateKind(Enum):
    RX = 'RX'
    RZ = 'RZ'
    CNOT = 'CNOT'
