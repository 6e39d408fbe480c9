from typing import List

from .Frame import Frame
from .BlockCsv import BlockCsv
from .AwgnChannel import AwgnChannel
from .FrameGrouper import FrameGrouper
from .ReceivedBlock import ReceivedBlock

__all__: List[str] = [
    'Frame',
    'BlockCsv',
    'AwgnChannel',
    'FrameGrouper',
    'ReceivedBlock',
]
