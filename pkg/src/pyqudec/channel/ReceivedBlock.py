from typing import Optional
from dataclasses import dataclass

from numpy.typing import NDArray
from numpy import float64, uint8, asarray, isfinite

from pyqudec.errors import LengthMismatch, InvalidParameter


@dataclass(frozen=True, eq=False)
class ReceivedBlock:
    block_id: int
    symbols: NDArray[float64]
    llrs: NDArray[float64]
    snr_db: float
    truth: Optional[NDArray[uint8]] = None

    def __post_init__(self) -> None:
        symbols: NDArray[float64] = asarray(self.symbols, dtype=float64)
        llrs: NDArray[float64] = asarray(self.llrs, dtype=float64)
        if symbols.shape != llrs.shape or symbols.ndim != 1:
            raise LengthMismatch(f'{symbols.size} symbols but {llrs.size} LLRs in block {self.block_id}')
        if not isfinite(llrs).all():
            raise InvalidParameter(f'Block {self.block_id} carries non-finite LLRs')

        object.__setattr__(self, 'symbols', symbols)
        object.__setattr__(self, 'llrs', llrs)
        if self.truth is not None:
            object.__setattr__(self, 'truth', asarray(self.truth, dtype=uint8))

    @property
    def is_preamble(self) -> bool:
        return self.truth is not None

    @property
    def n(self) -> int:
        return self.llrs.size
