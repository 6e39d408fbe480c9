from dataclasses import dataclass
from typing import List, Sequence

from numpy.typing import NDArray
from numpy import float64, stack, triu_indices

from pyqudec.qubo.Qubo import Qubo
from pyqudec.errors import EmptyInput, DimensionMismatch


@dataclass(frozen=True)
class CoefficientSpread:
    i: int
    j: int
    minimum: float
    maximum: float

    @property
    def constant(self) -> bool:
        return self.minimum == self.maximum

    @property
    def relative_spread(self) -> float:
        scale: float = max(abs(self.minimum), abs(self.maximum))
        return 0.0 if scale == 0.0 else (self.maximum - self.minimum) / scale

    @classmethod
    def of(cls, qubos: Sequence[Qubo]) -> List['CoefficientSpread']:
        if not qubos:
            raise EmptyInput('No QUBOs to compare')

        n: int = qubos[0].n_vars
        if any(qubo.n_vars != n for qubo in qubos):
            raise DimensionMismatch('QUBOs differ in variable count')

        rows: NDArray
        columns: NDArray
        rows, columns = triu_indices(n)
        values: NDArray[float64] = stack([qubo.q[rows, columns] for qubo in qubos])

        return [
            cls(
                i=int(row),
                j=int(column),
                minimum=float(values[:, index].min()),
                maximum=float(values[:, index].max())
            )
            for index, (row, column) in enumerate(zip(rows, columns))
        ]
