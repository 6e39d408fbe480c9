from typing import List
from dataclasses import dataclass, field

from pyqudec.channel.ReceivedBlock import ReceivedBlock


@dataclass
class Frame:
    snr_db: float
    preamble: List[ReceivedBlock] = field(default_factory=list)
    payload: List[ReceivedBlock] = field(default_factory=list)

    @property
    def blocks(self) -> List[ReceivedBlock]:
        return self.preamble + self.payload

    def __len__(self) -> int:
        return len(self.preamble) + len(self.payload)
