from pathlib import Path
from typing import List, Sequence, Tuple

from numpy.typing import NDArray
from numpy import uint8, zeros, flatnonzero, asarray

from pyqudec.errors import InvalidParameter, ConfigError


class ParityCheckMatrix:
    __rows: Tuple[Tuple[int, ...], ...]
    __number_bits: int

    def __init__(
            self,
            rows: Sequence[Sequence[int]],
            number_bits: int
    ) -> None:
        normalized: List[Tuple[int, ...]] = []
        for index, row in enumerate(rows):
            columns: Tuple[int, ...] = tuple(sorted(set(int(column) for column in row)))
            if len(columns) < 2:
                raise InvalidParameter(f'Check {index} has degree {len(columns)}; every check needs at least 2 bits')
            if columns[0] < 0 or columns[-1] >= number_bits:
                raise InvalidParameter(f'Check {index} references a bit outside 0..{number_bits - 1}')
            normalized.append(columns)

        if len(normalized) >= number_bits:
            raise InvalidParameter(f'{len(normalized)} checks on {number_bits} bits leave no data bit')

        self.__rows = tuple(normalized)
        self.__number_bits = number_bits

    @classmethod
    def from_dense(cls, matrix: NDArray) -> 'ParityCheckMatrix':
        dense: NDArray = asarray(matrix) % 2
        return cls(
            rows=[flatnonzero(row).tolist() for row in dense],
            number_bits=dense.shape[1]
        )

    @classmethod
    def loads(cls, text: str) -> 'ParityCheckMatrix':
        lines: List[str] = [line.strip() for line in text.splitlines() if line.strip()]
        if not lines:
            raise ConfigError('Empty parity-check text')

        try:
            number_checks, number_bits = (int(token) for token in lines[0].split())
            rows: List[List[int]] = [[int(token) for token in line.split()] for line in lines[1:]]
        except ValueError as error:
            raise ConfigError(f'Malformed parity-check text: {error}') from error

        if len(rows) != number_checks:
            raise ConfigError(f'Header announces {number_checks} checks but {len(rows)} rows follow')

        return cls(rows=rows, number_bits=number_bits)

    @classmethod
    def load(cls, path: Path | str) -> 'ParityCheckMatrix':
        return cls.loads(Path(path).read_text(encoding='utf-8'))

    def dumps(self) -> str:
        lines: List[str] = [f'{self.n_checks} {self.n_bits}']
        lines.extend(' '.join(str(column) for column in row) for row in self.__rows)
        return '\n'.join(lines) + '\n'

    def dump(self, path: Path | str) -> None:
        Path(path).write_text(self.dumps(), encoding='utf-8')

    @property
    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        return self.__rows

    @property
    def n_checks(self) -> int:
        return len(self.__rows)

    @property
    def n_bits(self) -> int:
        return self.__number_bits

    @property
    def degrees(self) -> List[int]:
        return [len(row) for row in self.__rows]

    def to_dense(self) -> NDArray[uint8]:
        dense: NDArray[uint8] = zeros((self.n_checks, self.n_bits), dtype=uint8)
        for index, row in enumerate(self.__rows):
            dense[index, list(row)] = 1
        return dense

    def syndrome(self, word: NDArray) -> NDArray[uint8]:
        word = asarray(word)
        return asarray([int(word[list(row)].sum()) % 2 for row in self.__rows], dtype=uint8)

    def is_cycle_free(self) -> bool:
        parent: List[int] = list(range(self.n_bits + self.n_checks))

        def find(node: int) -> int:
            while parent[node] != node:
                parent[node] = parent[parent[node]]
                node = parent[node]
            return node

        for check, row in enumerate(self.__rows):
            for bit in row:
                root_bit, root_check = find(bit), find(self.n_bits + check)
                if root_bit == root_check:
                    return False
                parent[root_bit] = root_check
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ParityCheckMatrix):
            return NotImplemented
        return self.__rows == other.rows and self.__number_bits == other.n_bits

    def __hash__(self) -> int:
        return hash((self.__rows, self.__number_bits))

    def __repr__(self) -> str:
        return f'ParityCheckMatrix(n_checks={self.n_checks}, n_bits={self.n_bits}, rows={list(self.__rows)})'
