from typing import List, Tuple

from numpy.typing import NDArray
from numpy import float64, uint8, asarray, tanh, arctanh, clip, cumprod, concatenate, ones, zeros, bincount

from pyqudec.errors import LengthMismatch
from pyqudec.classical.BpConfig import BpConfig
from pyqudec.codes.ParityCheckMatrix import ParityCheckMatrix


class BeliefPropagationDecoder:
    __parity_check: ParityCheckMatrix
    __config: BpConfig
    __edge_bits: NDArray
    __check_slices: List[Tuple[int, int]]

    def __init__(self, parity_check: ParityCheckMatrix, config: BpConfig = BpConfig()) -> None:
        self.__parity_check = parity_check
        self.__config = config
        self.__edge_bits = asarray([bit for row in parity_check.rows for bit in row])

        self.__check_slices = []
        start: int = 0
        for row in parity_check.rows:
            self.__check_slices.append((start, start + len(row)))
            start += len(row)

    @property
    def parity_check(self) -> ParityCheckMatrix:
        return self.__parity_check

    @property
    def config(self) -> BpConfig:
        return self.__config

    def __check_messages(self, bit_messages: NDArray[float64]) -> NDArray[float64]:
        limit: float = self.__config.message_clip
        t: NDArray[float64] = tanh(clip(bit_messages, -limit, limit) / 2)
        extrinsic: NDArray[float64] = zeros(t.size)
        for start, stop in self.__check_slices:
            row: NDArray[float64] = t[start:stop]
            before: NDArray[float64] = concatenate([ones(1), cumprod(row)[:-1]])
            after: NDArray[float64] = concatenate([cumprod(row[::-1])[:-1][::-1], ones(1)])
            extrinsic[start:stop] = before * after

        bound: float = tanh(limit / 2)
        return 2 * arctanh(clip(extrinsic, -bound, bound))

    def decode(self, llrs: NDArray) -> NDArray[uint8]:
        llrs = asarray(llrs, dtype=float64).ravel()
        if llrs.size != self.__parity_check.n_bits:
            raise LengthMismatch(f'Expected {self.__parity_check.n_bits} LLRs, got {llrs.size}')

        bit_messages: NDArray[float64] = llrs[self.__edge_bits]
        decision: NDArray[uint8] = (llrs < 0).astype(uint8)
        for _ in range(self.__config.max_iterations):
            check_messages: NDArray[float64] = self.__check_messages(bit_messages=bit_messages)
            posterior: NDArray[float64] = llrs + bincount(
                self.__edge_bits, weights=check_messages, minlength=llrs.size
            )
            decision = (posterior < 0).astype(uint8)
            if self.__config.early_stop and not self.__parity_check.syndrome(word=decision).any():
                break
            bit_messages = posterior[self.__edge_bits] - check_messages

        return decision
