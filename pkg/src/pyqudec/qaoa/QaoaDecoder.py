from typing import Optional, Tuple

from numpy.typing import NDArray
from numpy import uint8

from pyqudec.qubo.Qubo import Qubo
from pyqudec.codes.FecCode import FecCode
from pyqudec.qubo.QuboBuilder import QuboBuilder
from pyqudec.qsim.QuantumState import QuantumState
from pyqudec.qubo.BruteForceSolver import BruteForceSolver
from pyqudec.qaoa.DecodeResult import DecodeResult
from pyqudec.qaoa.InitStrategy import InitStrategy
from pyqudec.qaoa.QaoaObjective import QaoaObjective
from pyqudec.qaoa.OptimizerConfig import OptimizerConfig
from pyqudec.channel.ReceivedBlock import ReceivedBlock
from pyqudec.qsim.CircuitSimulator import CircuitSimulator
from pyqudec.qaoa.SolutionExtractor import SolutionExtractor
from pyqudec.qaoa.SimulationBackend import SimulationBackend
from pyqudec.qaoa.ParameterOptimizer import ParameterOptimizer
from pyqudec.qaoa.OptimizationOutcome import OptimizationOutcome


class QaoaDecoder:
    DEFAULT_NORMALIZATION_CAP: int = 16

    __builder: QuboBuilder
    __p: int
    __optimizer: ParameterOptimizer
    __backend: SimulationBackend
    __extractor: SolutionExtractor
    __simulator: CircuitSimulator
    __normalization_cap: int
    __solver: BruteForceSolver

    def __init__(
            self,
            code: FecCode,
            p: int = 4,
            config: OptimizerConfig = OptimizerConfig(),
            backend: SimulationBackend = SimulationBackend(),
            extractor: SolutionExtractor = SolutionExtractor(),
            simulator: CircuitSimulator = CircuitSimulator(),
            eliminate_frozen: bool = True,
            normalization_cap: int = DEFAULT_NORMALIZATION_CAP,
            solver: BruteForceSolver = BruteForceSolver()
    ) -> None:
        self.__builder = QuboBuilder.for_code(code=code, eliminate_frozen=eliminate_frozen)
        self.__p = p
        self.__optimizer = ParameterOptimizer(config=config)
        self.__backend = backend
        self.__extractor = extractor
        self.__simulator = simulator
        self.__normalization_cap = normalization_cap
        self.__solver = solver

    @property
    def builder(self) -> QuboBuilder:
        return self.__builder

    @property
    def p(self) -> int:
        return self.__p

    @property
    def config(self) -> OptimizerConfig:
        return self.__optimizer.config

    def cost_range(self, qubo: Qubo) -> Optional[Tuple[float, float]]:
        if qubo.n_vars > min(self.__normalization_cap, self.__solver.max_vars):
            return None
        return self.__solver.minimize(qubo=qubo)[1], self.__solver.maximize(qubo=qubo)[1]

    @staticmethod
    def normalize(value: float, cost_range: Optional[Tuple[float, float]]) -> Optional[float]:
        if cost_range is None:
            return None
        low, high = cost_range
        return 0.0 if high == low else (value - low) / (high - low)

    def decode_qubo(
            self,
            qubo: Qubo,
            init: InitStrategy,
            backend: Optional[SimulationBackend] = None,
            extractor: Optional[SolutionExtractor] = None
    ) -> DecodeResult:
        objective: QaoaObjective = QaoaObjective(
            qubo=qubo,
            backend=self.__backend if backend is None else backend,
            simulator=self.__simulator
        )
        outcome: OptimizationOutcome = self.__optimizer.optimize(
            objective=objective,
            init=init.initial_params(p=self.__p)
        )

        state: QuantumState = objective.state(params=outcome.params)
        solution: NDArray[uint8] = (self.__extractor if extractor is None else extractor).extract(
            state=state, costs=objective.costs
        )
        energy: float = qubo.cost(x=solution)

        cost_range: Optional[Tuple[float, float]] = self.cost_range(qubo=qubo)
        return DecodeResult(
            solution_bits=solution,
            data_bits=qubo.data_bits(solution=solution),
            codeword_bits=qubo.codeword_bits(solution=solution),
            energy=energy,
            normalized_energy=self.normalize(value=energy, cost_range=cost_range),
            expected_energy=outcome.objective,
            normalized_expected_energy=self.normalize(value=outcome.objective, cost_range=cost_range),
            iterations_used=outcome.evaluations,
            params_final=outcome.params,
            converged=outcome.converged
        )

    def decode_block(
            self,
            block: ReceivedBlock,
            init: InitStrategy,
            penalty_weight: Optional[float] = None,
            backend: Optional[SimulationBackend] = None,
            extractor: Optional[SolutionExtractor] = None
    ) -> DecodeResult:
        return self.decode_qubo(
            qubo=self.__builder.build(llrs=block.llrs, penalty_weight=penalty_weight),
            init=init,
            backend=backend,
            extractor=extractor
        )
