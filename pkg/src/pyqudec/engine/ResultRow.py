from typing import Any, List, Optional, Tuple
from dataclasses import dataclass, fields, astuple


@dataclass(frozen=True)
class ResultRow:
    block_id: int
    snr_db: float
    init_strategy: str
    mode: str
    p: Optional[int]
    iterations_used: Optional[int]
    energy: Optional[float]
    normalized_energy: Optional[float]
    expected_energy: Optional[float]
    normalized_expected_energy: Optional[float]
    bit_errors: int
    codeword_bit_errors: int
    converged: Optional[bool]
    wall_time_us: float

    NONDETERMINISTIC = ('wall_time_us',)

    @classmethod
    def header(cls) -> List[str]:
        return [row_field.name for row_field in fields(cls)]

    def values(self) -> Tuple[Any, ...]:
        return astuple(self)

    @property
    def group(self) -> Tuple[float, str, str]:
        return self.snr_db, self.init_strategy, self.mode
