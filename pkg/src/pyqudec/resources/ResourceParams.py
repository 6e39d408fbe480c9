from dataclasses import dataclass, fields, replace
from typing import Any, Dict, Mapping, Optional

from pyqudec.errors import ConfigError, InvalidParameter


@dataclass(frozen=True)
class ResourceParams:
    """
    Inputs of the run-time model T_run = N_sub * N_it * N_ly * GD * CD_ly * N_s with CD_ly = c * N_v.

    Times are in seconds. The sub-block decoded by one QUBO has ``block_length / n_sub`` bits.
    """
    block_length: int = 128
    n_sub: int = 1
    n_it: int = 1
    n_ly: int = 1
    n_shots: int = 1
    gate_duration: float = 1e-9
    depth_coeff: float = 1.0
    n_pps: float = 0.0
    qubits_per_problem: float = 0.0
    t_run_budget: Optional[float] = None
    code_family: str = 'polar'

    def __post_init__(self) -> None:
        for name in ('block_length', 'n_sub', 'n_it', 'n_ly', 'n_shots'):
            if getattr(self, name) < 1:
                raise InvalidParameter(f'{name} must be >= 1, got {getattr(self, name)}')
        if self.gate_duration <= 0 or self.depth_coeff <= 0:
            raise InvalidParameter('gate_duration and depth_coeff must be positive')
        if self.block_length % self.n_sub:
            raise InvalidParameter(f'{self.n_sub} sub-blocks do not divide a {self.block_length}-bit block')

    @property
    def subblock_bits(self) -> int:
        return self.block_length // self.n_sub

    def with_budget(self, t_run_budget: float) -> 'ResourceParams':
        return replace(self, t_run_budget=t_run_budget)

    @classmethod
    def from_mapping(cls, values: Mapping[str, Any]) -> 'ResourceParams':
        known: Dict[str, Any] = {field.name: field for field in fields(cls)}
        unknown = set(values) - set(known)
        if unknown:
            raise ConfigError(f'Unknown resource parameters {sorted(unknown)}')
        try:
            return cls(**dict(values))
        except (TypeError, InvalidParameter) as error:
            raise ConfigError(f'Invalid resource parameters: {error}') from error
