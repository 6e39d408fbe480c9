from dataclasses import dataclass
from typing import Any, FrozenSet, Mapping, Tuple

from numpy.typing import NDArray
from numpy import float64, full, empty, lexsort, arange

from pyqudec.errors import InvalidParameter, ConfigError


@dataclass(frozen=True)
class PolarCodeConfig:
    block_length: int
    data_bits: int
    frozen_set: FrozenSet[int]
    reliability_order: Tuple[int, ...]

    def __post_init__(self) -> None:
        n: int = self.block_length
        if n < 2 or n & (n - 1):
            raise InvalidParameter(f'Polar block length must be a power of two >= 2, got {n}')
        if not 1 <= self.data_bits <= n:
            raise InvalidParameter(f'Polar data bits must lie in 1..{n}, got {self.data_bits}')
        if sorted(self.reliability_order) != list(range(n)):
            raise InvalidParameter('Reliability order is not a permutation of the input positions')
        if self.frozen_set != frozenset(self.reliability_order[:n - self.data_bits]):
            raise InvalidParameter('Frozen set must be the N-K least reliable positions')

    @staticmethod
    def bhattacharyya(n: int) -> NDArray[float64]:
        """Bhattacharyya parameters z_i of the synthetic channels, design value 0.5 at the root."""
        if n < 1 or n & (n - 1):
            raise InvalidParameter(f'Block length must be a power of two, got {n}')

        z: NDArray[float64] = full(1, 0.5)
        while z.size < n:
            expanded: NDArray[float64] = empty(2 * z.size)
            expanded[0::2] = 2 * z - z ** 2
            expanded[1::2] = z ** 2
            z = expanded
        return z

    @classmethod
    def reliability_order_for(cls, n: int) -> Tuple[int, ...]:
        """Input positions sorted from least to most reliable; ties go to the lower index first."""
        z: NDArray[float64] = cls.bhattacharyya(n=n)
        return tuple(int(position) for position in lexsort((arange(n), -z)))

    @classmethod
    def build(cls, n: int, k: int) -> 'PolarCodeConfig':
        order: Tuple[int, ...] = cls.reliability_order_for(n=n)
        return cls(
            block_length=n,
            data_bits=k,
            frozen_set=frozenset(order[:n - k]),
            reliability_order=order
        )

    @classmethod
    def from_mapping(cls, fields: Mapping[str, Any]) -> 'PolarCodeConfig':
        try:
            return cls.build(n=int(fields['n']), k=int(fields['k']))
        except KeyError as error:
            raise ConfigError(f'Polar config needs fields n and k, missing {error}') from error

    @property
    def data_positions(self) -> Tuple[int, ...]:
        return tuple(position for position in range(self.block_length) if position not in self.frozen_set)

    @property
    def depth(self) -> int:
        return self.block_length.bit_length() - 1
