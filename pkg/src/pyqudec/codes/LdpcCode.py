from typing import List, Set, Tuple

from numpy.typing import NDArray
from numpy import uint8, hstack, eye

from pyqudec.codes.Gf2 import Gf2
from pyqudec.codes.FecCode import FecCode
from pyqudec.errors import RankDeficient
from pyqudec.codes.GeneratorMatrix import GeneratorMatrix
from pyqudec.codes.ParityCheckMatrix import ParityCheckMatrix


class LdpcCode(FecCode):
    __parity_check: ParityCheckMatrix
    __generator: GeneratorMatrix

    def __init__(self, parity_check: ParityCheckMatrix) -> None:
        self.__parity_check = parity_check
        self.__generator = self.generator_from_h(h=parity_check)

    @staticmethod
    def generator_from_h(h: ParityCheckMatrix) -> GeneratorMatrix:
        """
        Bring H into [A | I_{N-K}] form by GF(2) row reduction and a column permutation, then return
        G = [I_K | A^T] together with that permutation.

        Non-pivot columns go first in their original order, pivot columns last in row order.
        """
        reduced: NDArray[uint8]
        pivots: List[int]
        reduced, pivots = Gf2.row_reduce(matrix=h.to_dense())

        if len(pivots) < h.n_checks:
            raise RankDeficient(f'H has GF(2) rank {len(pivots)} < {h.n_checks} checks')

        pivot_set: Set[int] = set(pivots)
        non_pivots: List[int] = [column for column in range(h.n_bits) if column not in pivot_set]
        a: NDArray[uint8] = reduced[:, non_pivots]
        k: int = len(non_pivots)

        return GeneratorMatrix(
            systematic=hstack([eye(k, dtype=uint8), a.T]).astype(uint8),
            column_permutation=tuple(non_pivots + pivots)
        )

    @property
    def family(self) -> str:
        return 'ldpc'

    @property
    def parity_check(self) -> ParityCheckMatrix:
        return self.__parity_check

    @property
    def generator(self) -> GeneratorMatrix:
        return self.__generator

    @property
    def n(self) -> int:
        return self.__parity_check.n_bits

    @property
    def k(self) -> int:
        return self.__generator.k

    @property
    def data_positions(self) -> Tuple[int, ...]:
        return self.__generator.data_positions

    def encode(self, data: NDArray[uint8]) -> NDArray[uint8]:
        data = self._check_data_length(data=data)
        return Gf2.matmul(data[None, :], self.__generator.matrix)[0]

    def __repr__(self) -> str:
        return f'LdpcCode(n={self.n}, k={self.k}, parity_check={self.__parity_check!r})'
