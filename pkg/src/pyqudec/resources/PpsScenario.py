from dataclasses import dataclass


@dataclass(frozen=True)
class PpsScenario:
    bandwidth_mhz: float
    antennas: int
    pps: float
