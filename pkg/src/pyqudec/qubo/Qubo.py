from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from numpy.typing import NDArray
from numpy import float64, int64, uint8, array, asarray, array_equal, arange, zeros, full, triu, diag, flatnonzero

from pyqudec.qubo.IsingModel import IsingModel
from pyqudec.qubo.VariableRole import VariableRole
from pyqudec.errors import LengthMismatch, InvalidParameter, ConfigError


class Qubo:
    """
    cost(x) = x^T Q x + offset over binary x, with Q symmetric.

    ``codeword_map[i]`` is the variable holding codeword bit i (-1 when that bit was substituted by
    the constant 0); ``data_map[i]`` is the variable holding data bit i. ``logical_vars`` counts the
    variables before any frozen-input elimination.
    """

    __q: NDArray[float64]
    __offset: float
    __roles: Tuple[VariableRole, ...]
    __codeword_map: Tuple[int, ...]
    __data_map: Tuple[int, ...]
    __logical_vars: int

    def __init__(
            self,
            q: NDArray,
            offset: float = 0.0,
            roles: Optional[Sequence[VariableRole]] = None,
            codeword_map: Sequence[int] = (),
            data_map: Sequence[int] = (),
            logical_vars: Optional[int] = None
    ) -> None:
        q = array(q, dtype=float64)
        if q.ndim != 2 or q.shape[0] != q.shape[1]:
            raise InvalidParameter(f'QUBO matrix must be square, got shape {q.shape}')
        if not array_equal(q, q.T):
            raise InvalidParameter('QUBO matrix must be symmetric')

        n: int = q.shape[0]
        roles = tuple(roles) if roles is not None else (VariableRole.INTERMEDIATE,) * n
        if len(roles) != n:
            raise LengthMismatch(f'{len(roles)} roles for {n} variables')

        self.__q = q
        self.__q.setflags(write=False)
        self.__offset = float(offset)
        self.__roles = roles
        self.__codeword_map = tuple(int(index) for index in codeword_map)
        self.__data_map = tuple(int(index) for index in data_map)
        self.__logical_vars = n if logical_vars is None else int(logical_vars)

    @property
    def q(self) -> NDArray[float64]:
        return self.__q

    @property
    def offset(self) -> float:
        return self.__offset

    @property
    def n_vars(self) -> int:
        return self.__q.shape[0]

    @property
    def roles(self) -> Tuple[VariableRole, ...]:
        return self.__roles

    @property
    def codeword_map(self) -> Tuple[int, ...]:
        return self.__codeword_map

    @property
    def data_map(self) -> Tuple[int, ...]:
        return self.__data_map

    @property
    def logical_vars(self) -> int:
        return self.__logical_vars

    @property
    def coefficient_magnitude(self) -> float:
        """Sum of |Q_ij| over the upper triangle including the diagonal."""
        return float(abs(triu(self.__q)).sum())

    def cost(self, x: NDArray) -> float:
        x = asarray(x, dtype=float64).ravel()
        if x.size != self.n_vars:
            raise LengthMismatch(f'Assignment has {x.size} bits, QUBO has {self.n_vars} variables')
        return float(x @ self.__q @ x + self.__offset)

    def cost_vector(self) -> NDArray[float64]:
        index: NDArray[int64] = arange(2 ** self.n_vars, dtype=int64)
        costs: NDArray[float64] = full(index.size, self.__offset)

        def bit(variable: int) -> NDArray[int64]:
            return (index >> variable) & 1

        for variable in flatnonzero(diag(self.__q)):
            costs += self.__q[variable, variable] * bit(variable)

        upper: NDArray[float64] = triu(self.__q, k=1)
        for a, b in zip(*upper.nonzero()):
            costs += 2.0 * upper[a, b] * (bit(a) & bit(b))
        return costs

    def to_ising(self) -> IsingModel:
        """Substitute x_i = (1 - z_i) / 2."""
        off_diagonal: NDArray[float64] = self.__q - diag(diag(self.__q))
        h: NDArray[float64] = -0.5 * diag(self.__q) - 0.5 * off_diagonal.sum(axis=1)
        constant: float = (
                self.__offset
                + 0.5 * float(diag(self.__q).sum())
                + 0.5 * float(triu(off_diagonal, k=1).sum())
        )
        return IsingModel(h=h, j=0.5 * off_diagonal, constant=constant)

    def codeword_bits(self, solution: NDArray) -> NDArray[uint8]:
        solution = asarray(solution, dtype=uint8)
        return asarray(
            [solution[index] if index >= 0 else 0 for index in self.__codeword_map],
            dtype=uint8
        )

    def data_bits(self, solution: NDArray) -> NDArray[uint8]:
        solution = asarray(solution, dtype=uint8)
        return asarray([solution[index] for index in self.__data_map], dtype=uint8)

    def dumps(self) -> str:
        """Sparse text: header ``"n offset"``, then ``"i j value"`` for nonzero Q_ij with i <= j, floats in hex."""
        lines: List[str] = [f'{self.n_vars} {self.__offset.hex()}']
        upper: NDArray[float64] = triu(self.__q)
        for a, b in zip(*upper.nonzero()):
            lines.append(f'{a} {b} {float(upper[a, b]).hex()}')
        return '\n'.join(lines) + '\n'

    @classmethod
    def loads(cls, text: str) -> 'Qubo':
        lines: List[List[str]] = [line.split() for line in text.splitlines() if line.strip()]
        try:
            n: int = int(lines[0][0])
            offset: float = float.fromhex(lines[0][1])
            q: NDArray[float64] = zeros((n, n))
            for a, b, value in lines[1:]:
                q[int(a), int(b)] = q[int(b), int(a)] = float.fromhex(value)
        except (IndexError, ValueError) as error:
            raise ConfigError(f'Malformed sparse QUBO text: {error}') from error
        return cls(q=q, offset=offset)

    def write_sparse(self, path: Path | str) -> None:
        Path(path).write_text(self.dumps(), encoding='utf-8')

    @classmethod
    def read_sparse(cls, path: Path | str) -> 'Qubo':
        return cls.loads(Path(path).read_text(encoding='utf-8'))

    def __repr__(self) -> str:
        return f'Qubo(n_vars={self.n_vars}, logical_vars={self.__logical_vars}, offset={self.__offset})'
