from dataclasses import dataclass, field

from pyqudec.qsim.NoiseModel import NoiseModel
from pyqudec.errors import InvalidParameter


@dataclass(frozen=True)
class SimulationBackend:
    kind: str = 'exact'
    n_shots: int = 1024
    seed: int = 0
    noise: NoiseModel = field(default_factory=NoiseModel)

    KINDS = ('exact', 'sampled', 'noisy')

    def __post_init__(self) -> None:
        if self.kind not in self.KINDS:
            raise InvalidParameter(f'Backend {self.kind!r} not in {self.KINDS}')
        if self.n_shots < 1:
            raise InvalidParameter(f'n_shots must be >= 1, got {self.n_shots}')

    @classmethod
    def exact(cls) -> 'SimulationBackend':
        return cls(kind='exact')

    @classmethod
    def sampled(cls, n_shots: int, seed: int) -> 'SimulationBackend':
        return cls(kind='sampled', n_shots=n_shots, seed=seed)

    @classmethod
    def noisy(cls, noise: NoiseModel) -> 'SimulationBackend':
        return cls(kind='noisy', noise=noise)
