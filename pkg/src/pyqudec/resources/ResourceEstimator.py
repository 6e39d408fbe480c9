from math import ceil
from typing import List, Optional, Sequence

from pyqudec.resources.QubitRow import QubitRow
from pyqudec.resources.Topology import Topology
from pyqudec.resources.PpsScenario import PpsScenario
from pyqudec.codes.ParityCheckMatrix import ParityCheckMatrix
from pyqudec.resources.ResourceParams import ResourceParams
from pyqudec.resources.GateDurationRow import GateDurationRow
from pyqudec.errors import InvalidParameter, UnsupportedFamily


class ResourceEstimator:
    __parity_check: Optional[ParityCheckMatrix]

    def __init__(self, parity_check: Optional[ParityCheckMatrix] = None) -> None:
        self.__parity_check = parity_check

    def qubo_vars_for_subblock(self, code_family: str, subblock_bits: int) -> int:
        match code_family.lower():
            case 'polar':
                if subblock_bits < 1 or subblock_bits & (subblock_bits - 1):
                    raise InvalidParameter(f'Polar sub-block must be a power of two, got {subblock_bits}')
                return subblock_bits + subblock_bits * (subblock_bits.bit_length() - 1)
            case 'ldpc':
                if self.__parity_check is None:
                    raise InvalidParameter('LDPC sizing needs a parity-check matrix')
                bits: int = min(subblock_bits, self.__parity_check.n_bits)
                degrees: List[int] = [sum(1 for column in row if column < bits) for row in self.__parity_check.rows]
                return bits + sum(degree // 2 for degree in degrees if degree >= 2)
            case _:
                raise UnsupportedFamily(f'No QUBO sizing rule for code family {code_family!r}')

    def __work(self, params: ResourceParams) -> float:
        n_v: int = self.qubo_vars_for_subblock(code_family=params.code_family, subblock_bits=params.subblock_bits)
        return params.n_sub * params.n_it * params.n_ly * (params.depth_coeff * n_v) * params.n_shots

    def runtime(self, params: ResourceParams) -> float:
        return self.__work(params=params) * params.gate_duration

    def required_gate_duration(self, params: ResourceParams) -> float:
        if params.t_run_budget is None:
            raise InvalidParameter('required_gate_duration needs t_run_budget')
        return params.t_run_budget / self.__work(params=params)

    @staticmethod
    def qubit_demand(n_pps: float, qubits_per_problem: float, t_run: float) -> float:
        """N_Q = N_PPS * N_Q/p * T_run before rounding up."""
        return n_pps * qubits_per_problem * t_run

    @classmethod
    def qubit_count(cls, params: ResourceParams, t_run: Optional[float] = None) -> int:
        t: Optional[float] = params.t_run_budget if t_run is None else t_run
        if not t:
            return 0
        return ceil(round(cls.qubit_demand(params.n_pps, params.qubits_per_problem, t), 6))

    @staticmethod
    def depth_preset(topology: Topology | str, n_v: int) -> float:
        if isinstance(topology, str):
            topology = Topology.from_name(name=topology)
        return topology.depth(n_v=n_v)

    def gate_duration_table(
            self,
            params: ResourceParams,
            subblocks: Sequence[int],
            budgets_us: Sequence[float]
    ) -> List[GateDurationRow]:
        rows: List[GateDurationRow] = []
        for subblock in subblocks:
            n_sub: int = max(1, params.block_length // subblock)
            for budget_us in budgets_us:
                scoped: ResourceParams = ResourceParams(
                    block_length=n_sub * subblock,
                    n_sub=n_sub,
                    n_it=params.n_it,
                    n_ly=params.n_ly,
                    n_shots=params.n_shots,
                    gate_duration=params.gate_duration,
                    depth_coeff=params.depth_coeff,
                    t_run_budget=budget_us * 1e-6,
                    code_family=params.code_family
                )
                rows.append(GateDurationRow(
                    subblock=subblock,
                    n_v=self.qubo_vars_for_subblock(code_family=params.code_family, subblock_bits=subblock),
                    budget_us=budget_us,
                    required_gd_ns=self.required_gate_duration(params=scoped) * 1e9
                ))
        return rows

    def qubit_table(
            self,
            scenarios: Sequence[PpsScenario],
            qubits_per_problem: float,
            t_run: float
    ) -> List[QubitRow]:
        return [
            QubitRow(
                bandwidth_mhz=scenario.bandwidth_mhz,
                antennas=scenario.antennas,
                pps=scenario.pps,
                qubits=0 if not t_run else ceil(round(self.qubit_demand(scenario.pps, qubits_per_problem, t_run), 6))
            )
            for scenario in scenarios
        ]
