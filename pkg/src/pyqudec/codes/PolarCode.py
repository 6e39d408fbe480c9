from typing import Tuple

from numpy.typing import NDArray
from numpy import uint8, zeros, concatenate

from pyqudec.codes.Gf2 import Gf2
from pyqudec.codes.FecCode import FecCode
from pyqudec.errors import SizeLimit, InvalidParameter
from pyqudec.codes.PolarCodeConfig import PolarCodeConfig


class PolarCode(FecCode):
    MAX_TREE_DEPTH: int = 10

    __config: PolarCodeConfig
    __generator: NDArray[uint8]

    def __init__(self, config: PolarCodeConfig) -> None:
        self.__config = config
        self.__generator = self.generator(depth=config.depth)

    @classmethod
    def generator(cls, depth: int, max_depth: int | None = None) -> NDArray[uint8]:
        """G_N = G_2^{(x)d} with G_2 = [[1, 0], [1, 1]]."""
        limit: int = cls.MAX_TREE_DEPTH if max_depth is None else max_depth
        if depth < 1:
            raise InvalidParameter(f'Tree depth must be >= 1, got {depth}')
        if depth > limit:
            raise SizeLimit(f'Tree depth {depth} exceeds the configured maximum {limit}')
        return Gf2.kronecker_power(depth=depth)

    @property
    def family(self) -> str:
        return 'polar'

    @property
    def config(self) -> PolarCodeConfig:
        return self.__config

    @property
    def n(self) -> int:
        return self.__config.block_length

    @property
    def k(self) -> int:
        return self.__config.data_bits

    @property
    def data_positions(self) -> Tuple[int, ...]:
        return self.__config.data_positions

    def input_vector(self, data: NDArray[uint8]) -> NDArray[uint8]:
        data = self._check_data_length(data=data)
        e: NDArray[uint8] = zeros(self.n, dtype=uint8)
        e[list(self.data_positions)] = data
        return e

    def encode_matrix(self, data: NDArray[uint8]) -> NDArray[uint8]:
        return Gf2.matmul(self.input_vector(data=data)[None, :], self.__generator)[0]

    @classmethod
    def transform(cls, e: NDArray[uint8]) -> NDArray[uint8]:
        """Bottom-up tree evaluation: [e_L | e_R] -> [T(e_L) xor T(e_R), T(e_R)]."""
        if e.size == 1:
            return e.copy()
        half: int = e.size // 2
        left: NDArray[uint8] = cls.transform(e=e[:half])
        right: NDArray[uint8] = cls.transform(e=e[half:])
        return concatenate([left ^ right, right])

    def encode_tree(self, data: NDArray[uint8]) -> NDArray[uint8]:
        return self.transform(e=self.input_vector(data=data))

    def encode(self, data: NDArray[uint8]) -> NDArray[uint8]:
        return self.encode_tree(data=data)

    def __repr__(self) -> str:
        return f'PolarCode(n={self.n}, k={self.k}, frozen={sorted(self.__config.frozen_set)})'
