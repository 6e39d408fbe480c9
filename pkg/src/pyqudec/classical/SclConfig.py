from dataclasses import dataclass

from pyqudec.errors import InvalidParameter


@dataclass(frozen=True)
class SclConfig:
    list_size: int = 4

    def __post_init__(self) -> None:
        if self.list_size < 1:
            raise InvalidParameter(f'List size must be >= 1, got {self.list_size}')

    @classmethod
    def maximum_likelihood(cls, k: int) -> 'SclConfig':
        return cls(list_size=2 ** k)
