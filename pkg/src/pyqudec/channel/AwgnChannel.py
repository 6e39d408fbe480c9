from math import inf, isinf, sqrt

from numpy.typing import NDArray
from numpy.random import default_rng, Generator
from numpy import float64, uint8, asarray, where


class AwgnChannel:
    NOISELESS: float = inf
    __noiseless_variance_floor: float

    def __init__(self, noiseless_variance_floor: float = 1e-2) -> None:
        self.__noiseless_variance_floor = noiseless_variance_floor

    @property
    def noiseless_variance_floor(self) -> float:
        return self.__noiseless_variance_floor

    @staticmethod
    def bpsk_modulate(codeword: NDArray[uint8]) -> NDArray[float64]:
        return 1.0 - 2.0 * asarray(codeword, dtype=float64)

    @staticmethod
    def noise_variance(snr_db: float) -> float:
        if isinf(snr_db) and snr_db > 0:
            return 0.0
        return 10 ** (-snr_db / 10)

    @classmethod
    def awgn_apply(
            cls,
            symbols: NDArray[float64],
            snr_db: float,
            seed: int
    ) -> NDArray[float64]:
        symbols = asarray(symbols, dtype=float64)
        variance: float = cls.noise_variance(snr_db=snr_db)
        if variance == 0.0:
            return symbols.copy()

        rng: Generator = default_rng(seed)
        return symbols + sqrt(variance) * rng.standard_normal(symbols.shape)

    def llr_compute(
            self,
            received: NDArray[float64],
            snr_db: float
    ) -> NDArray[float64]:
        """L_i = 2 y_i / sigma^2; positive values favour bit 0. The noiseless sentinel uses the variance floor."""
        variance: float = self.noise_variance(snr_db=snr_db)
        if variance == 0.0:
            variance = self.__noiseless_variance_floor
        return 2.0 * asarray(received, dtype=float64) / variance

    @staticmethod
    def hard_decision(llrs: NDArray[float64]) -> NDArray[uint8]:
        return where(asarray(llrs) < 0, 1, 0).astype(uint8)
