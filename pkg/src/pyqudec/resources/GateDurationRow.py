from dataclasses import dataclass


@dataclass(frozen=True)
class GateDurationRow:
    subblock: int
    n_v: int
    budget_us: float
    required_gd_ns: float
