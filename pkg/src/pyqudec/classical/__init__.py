from typing import List

from .BpConfig import BpConfig
from .SclConfig import SclConfig
from .MlDecoder import MlDecoder
from .SclDecoder import SclDecoder
from .BeliefPropagationDecoder import BeliefPropagationDecoder

__all__: List[str] = [
    'BpConfig',
    'SclConfig',
    'MlDecoder',
    'SclDecoder',
    'BeliefPropagationDecoder',
]
