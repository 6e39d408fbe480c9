from typing import Tuple
from abc import ABC, abstractmethod

from numpy.typing import NDArray
from numpy import uint8, asarray

from pyqudec.errors import LengthMismatch


class FecCode(ABC):

    @property
    @abstractmethod
    def family(self) -> str:
        ...

    @property
    @abstractmethod
    def n(self) -> int:
        ...

    @property
    @abstractmethod
    def k(self) -> int:
        ...

    @property
    @abstractmethod
    def data_positions(self) -> Tuple[int, ...]:
        ...

    @abstractmethod
    def encode(self, data: NDArray[uint8]) -> NDArray[uint8]:
        ...

    def _check_data_length(self, data: NDArray) -> NDArray[uint8]:
        data = asarray(data, dtype=uint8).ravel()
        if data.size != self.k:
            raise LengthMismatch(f'Expected {self.k} data bits, got {data.size}')
        return data
