from typing import Tuple
from dataclasses import dataclass, field

from numpy.typing import NDArray
from numpy import uint8, zeros, asarray


@dataclass(frozen=True, eq=False)
class GeneratorMatrix:
    """
    Systematic generator G = [I_K | A^T] expressed in the permuted column order, together with the
    column permutation that put H into [A | I_{N-K}] form.

    ``column_permutation[j]`` is the original bit index placed at permuted column ``j``; the
    first K entries are therefore the positions that carry the data word in a codeword.
    """
    systematic: NDArray[uint8]
    column_permutation: Tuple[int, ...]
    matrix: NDArray[uint8] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        systematic: NDArray[uint8] = asarray(self.systematic, dtype=uint8)
        original: NDArray[uint8] = zeros(systematic.shape, dtype=uint8)
        original[:, list(self.column_permutation)] = systematic
        object.__setattr__(self, 'systematic', systematic)
        object.__setattr__(self, 'matrix', original)

    @property
    def k(self) -> int:
        return self.systematic.shape[0]

    @property
    def n(self) -> int:
        return self.systematic.shape[1]

    @property
    def data_positions(self) -> Tuple[int, ...]:
        return tuple(self.column_permutation[:self.k])
