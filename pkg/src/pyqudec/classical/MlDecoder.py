from itertools import product

from numpy.typing import NDArray
from numpy import float64, uint8, asarray, argmin, stack

from pyqudec.codes.FecCode import FecCode
from pyqudec.errors import SizeLimit, LengthMismatch


class MlDecoder:
    """
    Exhaustive maximum-likelihood decoding: argmin over all 2^K data words u of sum_i L_i x_i(u).

    Candidates are scored in ``itertools.product`` order and the first minimum wins, which resolves
    ties to the lexicographically smallest u.
    """

    DEFAULT_MAX_DATA_BITS: int = 20

    __code: FecCode
    __max_data_bits: int
    __words: NDArray[uint8] | None
    __codebook: NDArray[float64] | None
    __evaluations: int

    def __init__(self, code: FecCode, max_data_bits: int = DEFAULT_MAX_DATA_BITS) -> None:
        self.__code = code
        self.__max_data_bits = max_data_bits
        self.__words = None
        self.__codebook = None
        self.__evaluations = 0

    @property
    def code(self) -> FecCode:
        return self.__code

    @property
    def evaluations(self) -> int:
        return self.__evaluations

    def __enumerate(self) -> None:
        if self.__code.k > self.__max_data_bits:
            raise SizeLimit(f'K={self.__code.k} exceeds the ML cap of {self.__max_data_bits} data bits')
        words: NDArray[uint8] = asarray(list(product((0, 1), repeat=self.__code.k)), dtype=uint8)
        self.__words = words
        self.__codebook = stack([self.__code.encode(data=word) for word in words]).astype(float64)

    def decode(self, llrs: NDArray) -> NDArray[uint8]:
        llrs = asarray(llrs, dtype=float64).ravel()
        if llrs.size != self.__code.n:
            raise LengthMismatch(f'Expected {self.__code.n} LLRs, got {llrs.size}')
        if self.__codebook is None:
            self.__enumerate()

        scores: NDArray[float64] = self.__codebook @ llrs
        self.__evaluations = scores.size
        return self.__words[int(argmin(scores))].copy()

    def decode_codeword(self, llrs: NDArray) -> NDArray[uint8]:
        return self.__code.encode(data=self.decode(llrs=llrs))
