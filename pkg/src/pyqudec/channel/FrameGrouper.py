from math import floor
from typing import Dict, List, Sequence

from pyqudec.channel.Frame import Frame
from pyqudec.errors import EmptyInput, InvalidParameter
from pyqudec.channel.ReceivedBlock import ReceivedBlock


class FrameGrouper:
    """Partition blocks into frames by SNR quantized to ``step_db`` with round-half-up."""

    __step_db: float

    def __init__(self, step_db: float = 1.0) -> None:
        if step_db <= 0:
            raise InvalidParameter(f'SNR bin step must be positive, got {step_db}')
        self.__step_db = step_db

    @property
    def step_db(self) -> float:
        return self.__step_db

    def quantize(self, snr_db: float) -> float:
        return round(floor(snr_db / self.__step_db + 0.5) * self.__step_db, 9)

    def group_by_snr(self, blocks: Sequence[ReceivedBlock]) -> List[Frame]:
        if not blocks:
            raise EmptyInput('No blocks to group')

        frames: Dict[float, Frame] = {}
        for block in blocks:
            snr_bin: float = self.quantize(snr_db=block.snr_db)
            frame: Frame = frames.setdefault(snr_bin, Frame(snr_db=snr_bin))
            if block.is_preamble:
                frame.preamble.append(block)
            else:
                frame.payload.append(block)

        return [frames[snr_bin] for snr_bin in sorted(frames)]
