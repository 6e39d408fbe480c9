from dataclasses import dataclass

from numpy.typing import NDArray
from numpy import uint8

from pyqudec.channel.ReceivedBlock import ReceivedBlock


@dataclass(frozen=True, eq=False)
class Problem:
    snr_index: int
    problem_index: int
    block: ReceivedBlock
    data: NDArray[uint8]
    codeword: NDArray[uint8]
