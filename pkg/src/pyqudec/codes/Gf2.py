from typing import List, Tuple

from numpy.typing import NDArray
from numpy import uint8, asarray, flatnonzero, eye, kron, array


class Gf2:
    __G2: NDArray[uint8] = array([[1, 0], [1, 1]], dtype=uint8)

    @staticmethod
    def reduce(matrix: NDArray) -> NDArray[uint8]:
        return (asarray(matrix) % 2).astype(uint8)

    @classmethod
    def matmul(cls, a: NDArray, b: NDArray) -> NDArray[uint8]:
        return cls.reduce(asarray(a, dtype=int) @ asarray(b, dtype=int))

    @classmethod
    def row_reduce(cls, matrix: NDArray) -> Tuple[NDArray[uint8], List[int]]:
        reduced: NDArray[uint8] = cls.reduce(matrix).copy()
        number_rows, number_columns = reduced.shape
        pivots: List[int] = []

        row: int = 0
        for column in range(number_columns):
            if row == number_rows:
                break

            candidates: NDArray = flatnonzero(reduced[row:, column])
            if candidates.size == 0:
                continue

            pivot_row: int = row + int(candidates[0])
            if pivot_row != row:
                reduced[[row, pivot_row]] = reduced[[pivot_row, row]]

            others: NDArray = flatnonzero(reduced[:, column])
            others = others[others != row]
            reduced[others] ^= reduced[row]

            pivots.append(column)
            row += 1

        return reduced, pivots

    @classmethod
    def rank(cls, matrix: NDArray) -> int:
        return len(cls.row_reduce(matrix)[1])

    @classmethod
    def kronecker_power(cls, depth: int) -> NDArray[uint8]:
        power: NDArray[uint8] = eye(1, dtype=uint8)
        for _ in range(depth):
            power = kron(power, cls.__G2).astype(uint8)
        return power
