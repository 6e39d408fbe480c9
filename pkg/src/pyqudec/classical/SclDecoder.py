from typing import FrozenSet, Tuple

from numpy.typing import NDArray
from numpy import (
    float64, int64, uint8, asarray, sign, minimum, abs as absolute, exp, log1p, logaddexp, argsort, argmin,
    arange, concatenate, hstack, zeros
)

from pyqudec.errors import LengthMismatch
from pyqudec.classical.SclConfig import SclConfig
from pyqudec.codes.PolarCodeConfig import PolarCodeConfig


class SclDecoder:
    __config: PolarCodeConfig
    __scl: SclConfig
    __frozen: FrozenSet[int]

    def __init__(self, config: PolarCodeConfig, scl: SclConfig = SclConfig()) -> None:
        self.__config = config
        self.__scl = scl
        self.__frozen = frozenset(config.frozen_set)

    @property
    def list_size(self) -> int:
        return self.__scl.list_size

    @staticmethod
    def boxplus(a: NDArray[float64], b: NDArray[float64]) -> NDArray[float64]:
        return (
                sign(a) * sign(b) * minimum(absolute(a), absolute(b))
                + log1p(exp(-absolute(a + b)))
                - log1p(exp(-absolute(a - b)))
        )

    def __leaf(
            self,
            llr: NDArray[float64],
            position: int,
            metrics: NDArray[float64],
            decisions: NDArray[uint8]
    ) -> Tuple[NDArray[uint8], NDArray[int64], NDArray[float64], NDArray[uint8]]:
        paths: int = metrics.size
        if position in self.__frozen:
            return (
                zeros((paths, 1), dtype=uint8),
                arange(paths, dtype=int64),
                metrics + logaddexp(0.0, -llr),
                decisions
            )

        candidates: NDArray[float64] = concatenate([metrics + logaddexp(0.0, -llr), metrics + logaddexp(0.0, llr)])
        parents: NDArray[int64] = concatenate([arange(paths, dtype=int64), arange(paths, dtype=int64)])
        bits: NDArray[uint8] = concatenate([zeros(paths, dtype=uint8), zeros(paths, dtype=uint8) + 1])

        survivors: NDArray[int64] = argsort(candidates, kind='stable')[:self.__scl.list_size]
        decisions = decisions[parents[survivors]].copy()
        decisions[:, position] = bits[survivors]
        return bits[survivors][:, None], parents[survivors], candidates[survivors], decisions

    def __node(
            self,
            alpha: NDArray[float64],
            offset: int,
            metrics: NDArray[float64],
            decisions: NDArray[uint8]
    ) -> Tuple[NDArray[uint8], NDArray[int64], NDArray[float64], NDArray[uint8]]:
        if alpha.shape[1] == 1:
            return self.__leaf(llr=alpha[:, 0], position=offset, metrics=metrics, decisions=decisions)

        half: int = alpha.shape[1] // 2
        a: NDArray[float64] = alpha[:, :half]
        b: NDArray[float64] = alpha[:, half:]

        beta_left, parents_left, metrics, decisions = self.__node(
            alpha=self.boxplus(a, b), offset=offset, metrics=metrics, decisions=decisions
        )
        a, b = a[parents_left], b[parents_left]
        beta_right, parents_right, metrics, decisions = self.__node(
            alpha=b + (1 - 2 * beta_left.astype(float64)) * a, offset=offset + half, metrics=metrics, decisions=decisions
        )
        beta_left = beta_left[parents_right]
        return hstack([beta_left ^ beta_right, beta_right]), parents_left[parents_right], metrics, decisions

    def decode_inputs(self, llrs: NDArray) -> NDArray[uint8]:
        llrs = asarray(llrs, dtype=float64).ravel()
        n: int = self.__config.block_length
        if llrs.size != n:
            raise LengthMismatch(f'Expected {n} LLRs, got {llrs.size}')

        _, _, metrics, decisions = self.__node(
            alpha=llrs[None, :], offset=0, metrics=zeros(1), decisions=zeros((1, n), dtype=uint8)
        )
        return decisions[int(argmin(metrics))]

    def decode(self, llrs: NDArray) -> NDArray[uint8]:
        return self.decode_inputs(llrs=llrs)[list(self.__config.data_positions)]
