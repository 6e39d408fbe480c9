from typing import List, Set, Tuple

from pyqudec.codes.PolarCode import PolarCode
from pyqudec.qubo.QuboBuilder import QuboBuilder
from pyqudec.qubo.VariableRole import VariableRole


class PolarQuboBuilder(QuboBuilder):
    """
    Variables follow the encoding butterfly: the N inputs e_i, then for every XOR node of every
    stage a fresh output z and an ancilla a, with penalty (x + y + z - 2a)^2 for z = x xor y.
    That is N + N log2 N logical variables. Frozen inputs are substituted by 0 unless
    ``eliminate_frozen`` is off.
    """

    __code: PolarCode
    __eliminate_frozen: bool

    def __init__(
            self,
            code: PolarCode,
            eliminate_frozen: bool = True
    ) -> None:
        self.__code = code
        self.__eliminate_frozen = eliminate_frozen

        roles: List[VariableRole] = [VariableRole.INPUT_BIT] * code.n
        current: List[int] = list(range(code.n))
        penalties: List[List[Tuple[int, float]]] = []
        outputs: List[int] = []

        half: int = 1
        while half < code.n:
            for block_start in range(0, code.n, 2 * half):
                for offset in range(half):
                    left: int = block_start + offset
                    right: int = left + half
                    output: int = len(roles)
                    ancilla: int = output + 1
                    roles.extend([VariableRole.INTERMEDIATE, VariableRole.ANCILLA])
                    penalties.append([(current[left], 1.0), (current[right], 1.0), (output, 1.0), (ancilla, -2.0)])
                    outputs.append(output)
                    current[left] = output
            half *= 2

        codeword: Set[int] = set(current)
        for output in outputs:
            if output in codeword:
                roles[output] = VariableRole.CODEWORD_BIT

        eliminated: Set[int] = set(code.config.frozen_set) if eliminate_frozen else set()
        self._compile(
            logical_roles=roles,
            penalties=penalties,
            codeword_variables=current,
            data_variables=code.data_positions,
            eliminated=eliminated
        )

    @property
    def code(self) -> PolarCode:
        return self.__code

    @property
    def eliminate_frozen(self) -> bool:
        return self.__eliminate_frozen
