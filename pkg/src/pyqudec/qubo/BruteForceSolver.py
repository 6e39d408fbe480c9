from math import inf
from typing import Tuple

from numpy.typing import NDArray
from numpy import float64, int64, uint8, arange, argmin, zeros

from pyqudec.qubo.Qubo import Qubo
from pyqudec.errors import SizeLimit


class BruteForceSolver:
    """
    Exhaustive QUBO search.

    Assignments are scanned in increasing numeric order with variable 0 as the most significant bit,
    and only a strictly better cost replaces the incumbent, so ties resolve to the smallest bitstring.
    """

    DEFAULT_MAX_VARS: int = 24
    CHUNK_BITS: int = 16

    __max_vars: int

    def __init__(self, max_vars: int = DEFAULT_MAX_VARS) -> None:
        self.__max_vars = max_vars

    @property
    def max_vars(self) -> int:
        return self.__max_vars

    def minimize(self, qubo: Qubo) -> Tuple[NDArray[uint8], float]:
        return self.__search(qubo=qubo, sign=1.0)

    def maximize(self, qubo: Qubo) -> Tuple[NDArray[uint8], float]:
        return self.__search(qubo=qubo, sign=-1.0)

    def __search(self, qubo: Qubo, sign: float) -> Tuple[NDArray[uint8], float]:
        n: int = qubo.n_vars
        if n > self.__max_vars:
            raise SizeLimit(f'{n} variables exceed the brute-force cap of {self.__max_vars}')
        if n == 0:
            return zeros(0, dtype=uint8), qubo.offset

        shifts: NDArray[int64] = arange(n - 1, -1, -1, dtype=int64)
        total: int = 1 << n
        chunk: int = 1 << min(n, self.CHUNK_BITS)

        best_index: int = 0
        best_cost: float = inf
        for start in range(0, total, chunk):
            index: NDArray[int64] = arange(start, min(start + chunk, total), dtype=int64)
            bits: NDArray[float64] = ((index[:, None] >> shifts[None, :]) & 1).astype(float64)
            costs: NDArray[float64] = sign * ((bits @ qubo.q) * bits).sum(axis=1)

            local: int = int(argmin(costs))
            if costs[local] < best_cost:
                best_cost = float(costs[local])
                best_index = start + local

        solution: NDArray[uint8] = ((best_index >> shifts) & 1).astype(uint8)
        return solution, qubo.cost(x=solution)
