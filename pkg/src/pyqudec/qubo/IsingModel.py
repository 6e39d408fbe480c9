from dataclasses import dataclass

from numpy.typing import NDArray
from numpy import float64, asarray, arange, int64, count_nonzero, triu, diag, allclose, full, flatnonzero

from pyqudec.errors import InvalidParameter


@dataclass(frozen=True, eq=False)
class IsingModel:
    """energy(z) = sum_i h_i z_i + sum_{i<j} J_ij z_i z_j + constant, z_i in {-1, +1}."""
    h: NDArray[float64]
    j: NDArray[float64]
    constant: float

    def __post_init__(self) -> None:
        h: NDArray[float64] = asarray(self.h, dtype=float64)
        j: NDArray[float64] = asarray(self.j, dtype=float64)
        if j.shape != (h.size, h.size) or not allclose(j, j.T) or count_nonzero(diag(j)):
            raise InvalidParameter('Couplings must be a symmetric matrix with zero diagonal matching the fields')
        object.__setattr__(self, 'h', h)
        object.__setattr__(self, 'j', j)

    @property
    def n(self) -> int:
        return self.h.size

    def energy(self, z: NDArray) -> float:
        z = asarray(z, dtype=float64)
        return float(self.h @ z + 0.5 * z @ self.j @ z + self.constant)

    def energy_vector(self, include_constant: bool = True) -> NDArray[float64]:
        """Energies of all 2^n basis states; qubit i is bit i of the basis index, spin z_i = 1 - 2 b_i."""
        index: NDArray[int64] = arange(2 ** self.n, dtype=int64)
        energies: NDArray[float64] = full(index.size, self.constant if include_constant else 0.0)

        def spin(qubit: int) -> NDArray[float64]:
            return 1.0 - 2.0 * ((index >> qubit) & 1)

        for qubit in flatnonzero(self.h):
            energies += self.h[qubit] * spin(qubit)

        upper: NDArray[float64] = triu(self.j, k=1)
        for a, b in zip(*upper.nonzero()):
            energies += upper[a, b] * spin(a) * spin(b)
        return energies
