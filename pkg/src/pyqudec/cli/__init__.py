from typing import List

from .Cli import Cli, main

__all__: List[str] = [
    'Cli',
    'main',
]
