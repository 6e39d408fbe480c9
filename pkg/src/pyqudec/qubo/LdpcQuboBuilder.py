from typing import List, Tuple

from pyqudec.codes.LdpcCode import LdpcCode
from pyqudec.qubo.QuboBuilder import QuboBuilder
from pyqudec.qubo.VariableRole import VariableRole


class LdpcQuboBuilder(QuboBuilder):
    """
    Variables: the N codeword bits, then floor(deg/2) ancillas per check in row order.
    Check c over bits b_1..b_k contributes (sum b_i - 2 sum a_j)^2.
    """

    __code: LdpcCode

    def __init__(self, code: LdpcCode) -> None:
        self.__code = code

        roles: List[VariableRole] = [VariableRole.CODEWORD_BIT] * code.n
        penalties: List[List[Tuple[int, float]]] = []
        for row in code.parity_check.rows:
            ancillas: List[int] = list(range(len(roles), len(roles) + len(row) // 2))
            roles.extend([VariableRole.ANCILLA] * len(ancillas))
            penalties.append(
                [(bit, 1.0) for bit in row] + [(ancilla, -2.0) for ancilla in ancillas]
            )

        self._compile(
            logical_roles=roles,
            penalties=penalties,
            codeword_variables=range(code.n),
            data_variables=code.data_positions
        )

    @property
    def code(self) -> LdpcCode:
        return self.__code
