from dataclasses import dataclass

from pyqudec.errors import InvalidParameter


@dataclass(frozen=True)
class NoiseModel:
    """Depolarizing rates: ``p1`` after every RX, ``p2`` after every CNOT. RZ is noiseless."""
    p1: float = 0.0
    p2: float = 0.0

    def __post_init__(self) -> None:
        for name, rate in (('p1', self.p1), ('p2', self.p2)):
            if not 0.0 <= rate <= 1.0:
                raise InvalidParameter(f'Depolarizing rate {name}={rate} outside [0, 1]')

    @classmethod
    def from_two_qubit_rate(cls, rate: float, one_qubit_ratio: float = 1.0) -> 'NoiseModel':
        return cls(p1=min(1.0, rate * one_qubit_ratio), p2=rate)

    @property
    def noiseless(self) -> bool:
        return self.p1 == 0.0 and self.p2 == 0.0
