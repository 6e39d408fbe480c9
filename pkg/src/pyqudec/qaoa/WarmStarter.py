import logging
from math import sqrt
from typing import List, Optional, Sequence, Tuple

from pyqudec.qubo.Qubo import Qubo
from pyqudec.channel.Frame import Frame
from pyqudec.qubo.QuboBuilder import QuboBuilder
from pyqudec.errors import InvalidParameter, NoPreamble
from pyqudec.qaoa.AnsatzParams import AnsatzParams
from pyqudec.qaoa.QaoaObjective import QaoaObjective
from pyqudec.qaoa.OptimizerConfig import OptimizerConfig
from pyqudec.qaoa.ParameterOptimizer import ParameterOptimizer
from pyqudec.qaoa.OptimizationOutcome import OptimizationOutcome

logger = logging.getLogger(__name__)


class WarmStarter:
    """
    Offline angle search on the first preamble block of a frame.

    The base seed is a linear ramp whose gammas are divided by sqrt(sum_{i<=j} |Q_ij|) of the preamble
    QUBO. The ramp is evaluated once per entry of ``scales`` (gamma multipliers), the lowest one seeds a
    single local search that runs on gamma / (scale / sqrt(magnitude)).
    """

    DEFAULT_BUDGET: int = 500
    DEFAULT_SCALES: Tuple[float, ...] = (0.25, 0.5, 1.0, 2.0, 4.0)

    __gamma0: float
    __beta0: float
    __config: OptimizerConfig
    __scales: Tuple[float, ...]

    def __init__(
            self,
            gamma0: float = 0.5,
            beta0: float = 0.5,
            config: OptimizerConfig = OptimizerConfig(max_iterations=DEFAULT_BUDGET),
            scales: Sequence[float] = DEFAULT_SCALES
    ) -> None:
        if not scales or any(scale <= 0 for scale in scales):
            raise InvalidParameter(f'Seed scales must be a non-empty list of positive factors, got {scales}')
        self.__gamma0 = gamma0
        self.__beta0 = beta0
        self.__config = config
        self.__scales = tuple(float(scale) for scale in scales)

    @property
    def config(self) -> OptimizerConfig:
        return self.__config

    @property
    def scales(self) -> Tuple[float, ...]:
        return self.__scales

    @staticmethod
    def gamma_unit(qubo: Qubo) -> float:
        magnitude: float = qubo.coefficient_magnitude
        return 1.0 if magnitude == 0.0 else 1 / sqrt(magnitude)

    def seed_params(self, qubo: Qubo, p: int) -> AnsatzParams:
        ramp: AnsatzParams = AnsatzParams.linear_ramp(p=p, gamma0=self.__gamma0, beta0=self.__beta0)
        return ramp.scale_gammas(factor=self.gamma_unit(qubo=qubo))

    def select_seed(self, objective: QaoaObjective, p: int) -> Tuple[AnsatzParams, float]:
        base: AnsatzParams = self.seed_params(qubo=objective.qubo, p=p)
        candidates: List[Tuple[float, float, AnsatzParams]] = []
        for scale in self.__scales:
            params: AnsatzParams = base.scale_gammas(factor=scale)
            candidates.append((objective(params), scale, params))

        value, scale, params = min(candidates, key=lambda candidate: candidate[:2])
        logger.debug('Seed scale %g chosen with objective %.6g', scale, value)
        return params, scale

    def search(
            self,
            frame: Frame,
            builder: QuboBuilder,
            p: int,
            penalty_weight: Optional[float] = None
    ) -> OptimizationOutcome:
        if not frame.preamble:
            raise NoPreamble(f'Frame at {frame.snr_db} dB carries no preamble block')

        qubo: Qubo = builder.build(llrs=frame.preamble[0].llrs, penalty_weight=penalty_weight)
        objective: QaoaObjective = QaoaObjective(qubo=qubo)
        seed, scale = self.select_seed(objective=objective, p=p)
        outcome: OptimizationOutcome = ParameterOptimizer(config=self.__config).optimize(
            objective=objective,
            init=seed,
            gamma_scale=scale * self.gamma_unit(qubo=qubo)
        )
        logger.info(
            'Warm start at %.3g dB: objective %.6g -> %.6g after %d evaluations',
            frame.snr_db, outcome.initial_objective, outcome.objective, outcome.evaluations
        )
        return outcome

    def warm_start_from_preamble(
            self,
            frame: Frame,
            builder: QuboBuilder,
            p: int,
            penalty_weight: Optional[float] = None
    ) -> AnsatzParams:
        return self.search(frame=frame, builder=builder, p=p, penalty_weight=penalty_weight).params
