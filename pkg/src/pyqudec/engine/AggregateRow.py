from typing import Any, List, Optional, Sequence, Tuple
from dataclasses import dataclass, fields, astuple

from numpy import mean, var

from pyqudec.errors import EmptyInput
from pyqudec.engine.ResultRow import ResultRow


@dataclass(frozen=True)
class AggregateRow:
    """Per (snr, strategy, mode) summary; ``ber`` is total data-bit errors over data bits transmitted."""
    snr_db: float
    init_strategy: str
    mode: str
    problems: int
    mean_energy: Optional[float]
    energy_variance: Optional[float]
    mean_normalized_energy: Optional[float]
    mean_expected_energy: Optional[float]
    mean_normalized_expected_energy: Optional[float]
    mean_bit_errors: float
    mean_codeword_bit_errors: float
    ber: float

    @classmethod
    def header(cls) -> List[str]:
        return [row_field.name for row_field in fields(cls)]

    def values(self) -> Tuple[Any, ...]:
        return astuple(self)

    @staticmethod
    def __mean_of(values: Sequence[Optional[float]]) -> Optional[float]:
        present = [value for value in values if value is not None]
        return float(mean(present)) if present else None

    @classmethod
    def of(cls, rows: Sequence[ResultRow], data_bits: int) -> 'AggregateRow':
        if not rows:
            raise EmptyInput('Cannot aggregate an empty group')
        energies = [row.energy for row in rows if row.energy is not None]
        bit_errors: int = sum(row.bit_errors for row in rows)
        return cls(
            snr_db=rows[0].snr_db,
            init_strategy=rows[0].init_strategy,
            mode=rows[0].mode,
            problems=len(rows),
            mean_energy=float(mean(energies)) if energies else None,
            energy_variance=float(var(energies)) if energies else None,
            mean_normalized_energy=cls.__mean_of([row.normalized_energy for row in rows]),
            mean_expected_energy=cls.__mean_of([row.expected_energy for row in rows]),
            mean_normalized_expected_energy=cls.__mean_of([row.normalized_expected_energy for row in rows]),
            mean_bit_errors=bit_errors / len(rows),
            mean_codeword_bit_errors=sum(row.codeword_bit_errors for row in rows) / len(rows),
            ber=bit_errors / (len(rows) * data_bits)
        )
