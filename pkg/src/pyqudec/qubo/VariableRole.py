from enum import Enum


class VariableRole(Enum):
    INPUT_BIT = 'input-bit'
    CODEWORD_BIT = 'codeword-bit'
    INTERMEDIATE = 'intermediate'
    ANCILLA = 'ancilla'
