from dataclasses import dataclass

from pyqudec.errors import InvalidParameter


@dataclass(frozen=True)
class BpConfig:
    max_iterations: int = 50
    early_stop: bool = True
    message_clip: float = 30.0

    def __post_init__(self) -> None:
        if self.max_iterations < 1:
            raise InvalidParameter(f'BP needs at least one iteration, got {self.max_iterations}')
        if self.message_clip <= 0:
            raise InvalidParameter(f'message_clip must be positive, got {self.message_clip}')
