from abc import ABC, abstractmethod
from typing import Dict, List, Optional, Sequence, Set, Tuple

from numpy.typing import NDArray
from numpy import float64, zeros, asarray, abs as absolute

from pyqudec.qubo.Qubo import Qubo
from pyqudec.codes.FecCode import FecCode
from pyqudec.codes.LdpcCode import LdpcCode
from pyqudec.codes.PolarCode import PolarCode
from pyqudec.qubo.VariableRole import VariableRole
from pyqudec.errors import LengthMismatch, WeightTooSmall, UnsupportedFamily


class QuboBuilder(ABC):
    """
    Decoding QUBO = w_s * satisfier + distance.

    The satisfier is a sum of squared even-parity penalties that depends on the code only; the
    distance sum_i L_i x_i over codeword variables carries the channel and lands on the diagonal.
    Subclasses describe the code structure once, on construction; ``build`` only adds the LLRs.
    """

    __satisfier: NDArray[float64]
    __roles: Tuple[VariableRole, ...]
    __codeword_map: Tuple[int, ...]
    __data_map: Tuple[int, ...]
    __logical_vars: int

    def _compile(
            self,
            logical_roles: Sequence[VariableRole],
            penalties: Sequence[Sequence[Tuple[int, float]]],
            codeword_variables: Sequence[int],
            data_variables: Sequence[int],
            eliminated: Set[int] = frozenset()
    ) -> None:
        """
        Expand every penalty (sum_k c_k v_k)^2 into a symmetric unit-weight matrix using v^2 = v,
        dropping variables fixed to the constant 0 and compacting the remaining indices.
        """
        active: List[int] = [variable for variable in range(len(logical_roles)) if variable not in eliminated]
        position: Dict[int, int] = {variable: index for index, variable in enumerate(active)}

        satisfier: NDArray[float64] = zeros((len(active), len(active)))
        for penalty in penalties:
            terms: List[Tuple[int, float]] = [
                (position[variable], coefficient) for variable, coefficient in penalty if variable in position
            ]
            for index, (a, coefficient_a) in enumerate(terms):
                satisfier[a, a] += coefficient_a ** 2
                for b, coefficient_b in terms[index + 1:]:
                    satisfier[a, b] += coefficient_a * coefficient_b
                    satisfier[b, a] += coefficient_a * coefficient_b

        self.__satisfier = satisfier
        self.__roles = tuple(logical_roles[variable] for variable in active)
        self.__codeword_map = tuple(position.get(variable, -1) for variable in codeword_variables)
        self.__data_map = tuple(position[variable] for variable in data_variables)
        self.__logical_vars = len(logical_roles)

    @property
    @abstractmethod
    def code(self) -> FecCode:
        ...

    @property
    def satisfier(self) -> NDArray[float64]:
        return self.__satisfier

    @property
    def n_vars(self) -> int:
        return self.__satisfier.shape[0]

    @property
    def logical_vars(self) -> int:
        return self.__logical_vars

    @staticmethod
    def default_penalty_weight(llrs: NDArray) -> float:
        return float(absolute(asarray(llrs, dtype=float64)).sum()) + 1.0

    def build(
            self,
            llrs: NDArray,
            penalty_weight: Optional[float] = None
    ) -> Qubo:
        llrs = asarray(llrs, dtype=float64).ravel()
        if llrs.size != self.code.n:
            raise LengthMismatch(f'Expected {self.code.n} LLRs, got {llrs.size}')

        bound: float = float(absolute(llrs).sum())
        weight: float = self.default_penalty_weight(llrs=llrs) if penalty_weight is None else float(penalty_weight)
        if weight <= bound:
            raise WeightTooSmall(f'Penalty weight {weight} must exceed sum |L| = {bound}')

        q: NDArray[float64] = weight * self.__satisfier
        for bit, variable in enumerate(self.__codeword_map):
            if variable >= 0:
                q[variable, variable] += llrs[bit]

        return Qubo(
            q=q,
            offset=0.0,
            roles=self.__roles,
            codeword_map=self.__codeword_map,
            data_map=self.__data_map,
            logical_vars=self.__logical_vars
        )

    @staticmethod
    def for_code(code: FecCode, eliminate_frozen: bool = True) -> 'QuboBuilder':
        from pyqudec.qubo.LdpcQuboBuilder import LdpcQuboBuilder
        from pyqudec.qubo.PolarQuboBuilder import PolarQuboBuilder

        match code.family:
            case 'ldpc' if isinstance(code, LdpcCode):
                return LdpcQuboBuilder(code=code)
            case 'polar' if isinstance(code, PolarCode):
                return PolarQuboBuilder(code=code, eliminate_frozen=eliminate_frozen)
            case _:
                raise UnsupportedFamily(f'No QUBO builder for code family {code.family!r}')
