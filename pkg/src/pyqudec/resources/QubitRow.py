from dataclasses import dataclass


@dataclass(frozen=True)
class QubitRow:
    bandwidth_mhz: float
    antennas: int
    pps: float
    qubits: int
