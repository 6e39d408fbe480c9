from enum import Enum

from pyqudec.errors import InvalidParameter


class Topology(Enum):
    HEAVY_HEX = 6.0
    SYCAMORE = 2.5
    LINEAR = 1.0

    @classmethod
    def from_name(cls, name: str) -> 'Topology':
        match name.lower().replace('_', '-'):
            case 'heavy-hex':
                return cls.HEAVY_HEX
            case 'sycamore':
                return cls.SYCAMORE
            case 'linear':
                return cls.LINEAR
            case _:
                raise InvalidParameter(f'Topology {name!r} not found')

    def depth(self, n_v: int) -> float:
        return self.value * n_v
