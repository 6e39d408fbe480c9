from dataclasses import dataclass
from typing import Sequence, Tuple

from numpy.typing import NDArray
from numpy import float64, asarray, concatenate

from pyqudec.errors import InvalidParameter


@dataclass(frozen=True)
class AnsatzParams:
    gammas: Tuple[float, ...]
    betas: Tuple[float, ...]

    def __post_init__(self) -> None:
        if len(self.gammas) != len(self.betas) or not self.gammas:
            raise InvalidParameter(f'Need p >= 1 equal-length angle lists, got {len(self.gammas)} and {len(self.betas)}')
        object.__setattr__(self, 'gammas', tuple(float(angle) for angle in self.gammas))
        object.__setattr__(self, 'betas', tuple(float(angle) for angle in self.betas))

    @property
    def p(self) -> int:
        return len(self.gammas)

    def to_vector(self) -> NDArray[float64]:
        return concatenate([asarray(self.gammas, dtype=float64), asarray(self.betas, dtype=float64)])

    @classmethod
    def from_vector(cls, vector: Sequence[float]) -> 'AnsatzParams':
        vector = asarray(vector, dtype=float64).ravel()
        if vector.size % 2:
            raise InvalidParameter(f'Angle vector length {vector.size} is odd')
        p: int = vector.size // 2
        return cls(gammas=tuple(vector[:p]), betas=tuple(vector[p:]))

    @classmethod
    def constant(cls, p: int, value: float) -> 'AnsatzParams':
        return cls(gammas=(value,) * p, betas=(value,) * p)

    @classmethod
    def linear_ramp(cls, p: int, gamma0: float = 0.5, beta0: float = 0.5) -> 'AnsatzParams':
        """
        gamma_l = (l / p) gamma0 and beta_l = -(1 - (l - 1) / p) beta0 for l = 1..p.

        The mixer is RX(2 beta) = exp(-i beta X) on |+>, so minimisation anneals with negative betas.
        """
        if p < 1:
            raise InvalidParameter(f'Layer count must be >= 1, got {p}')
        return cls(
            gammas=tuple(layer / p * gamma0 for layer in range(1, p + 1)),
            betas=tuple(-(1 - (layer - 1) / p) * beta0 for layer in range(1, p + 1))
        )

    def scale_gammas(self, factor: float) -> 'AnsatzParams':
        return AnsatzParams(gammas=tuple(gamma * factor for gamma in self.gammas), betas=self.betas)
