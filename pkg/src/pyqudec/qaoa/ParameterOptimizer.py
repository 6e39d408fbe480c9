import logging
from math import inf
from typing import Callable, Dict, List, Optional, Tuple

from scipy.optimize import minimize, OptimizeResult
from numpy.typing import NDArray
from numpy import float64, array, concatenate, eye, full, ones
from numpy.linalg import norm

from pyqudec.errors import InvalidParameter
from pyqudec.qaoa.AnsatzParams import AnsatzParams
from pyqudec.qaoa.OptimizerConfig import OptimizerConfig
from pyqudec.qaoa.OptimizationOutcome import OptimizationOutcome

logger = logging.getLogger(__name__)


class BudgetExhausted(Exception):
    pass


class ParameterOptimizer:
    __config: OptimizerConfig

    def __init__(self, config: OptimizerConfig = OptimizerConfig()) -> None:
        self.__config = config

    @property
    def config(self) -> OptimizerConfig:
        return self.__config

    def optimize(
            self,
            objective: Callable[[AnsatzParams], float],
            init: AnsatzParams,
            gamma_scale: float = 1.0
    ) -> OptimizationOutcome:
        if gamma_scale <= 0:
            raise InvalidParameter(f'gamma_scale must be positive, got {gamma_scale}')
        # the search runs on gamma / gamma_scale and beta
        scale: NDArray[float64] = concatenate([full(init.p, gamma_scale), ones(init.p)])
        budget: Optional[int] = self.__config.max_iterations or None
        cache: Dict[Tuple[float, ...], float] = {}
        history: List[float] = []
        best_value: float = inf
        best_vector: NDArray[float64] = init.to_vector()

        def evaluate(vector: NDArray[float64]) -> float:
            nonlocal best_value, best_vector
            key: Tuple[float, ...] = tuple(float(value) for value in vector)
            if key in cache:
                return cache[key]
            if budget is not None and len(history) >= budget and not self.__config.one_iteration:
                raise BudgetExhausted()

            angles: NDArray[float64] = array(vector, dtype=float64) * scale
            value: float = float(objective(AnsatzParams.from_vector(vector=angles)))
            cache[key] = value
            if value < best_value:
                best_value, best_vector = value, angles
            history.append(best_value)
            return value

        x0: NDArray[float64] = init.to_vector() / scale
        initial_objective: float = evaluate(vector=x0)

        converged: bool
        if self.__config.one_iteration:
            converged = self.__linear_step(evaluate=evaluate, x0=x0, f0=initial_objective)
        else:
            converged = self.__cobyla(evaluate=evaluate, x0=x0, budget=budget)

        logger.debug(
            'Optimized p=%d: %.6g -> %.6g in %d evaluations (converged=%s)',
            init.p, initial_objective, best_value, len(history), converged
        )
        return OptimizationOutcome(
            params=AnsatzParams.from_vector(vector=best_vector),
            objective=best_value,
            initial_objective=initial_objective,
            evaluations=len(history),
            converged=converged,
            history=tuple(history)
        )

    def __cobyla(
            self,
            evaluate: Callable[[NDArray[float64]], float],
            x0: NDArray[float64],
            budget: Optional[int]
    ) -> bool:
        options: Dict[str, float | int] = {'rhobeg': self.__config.initial_step}
        if budget is not None:
            options['maxiter'] = max(budget, x0.size + 2)

        try:
            result: OptimizeResult = minimize(
                evaluate,
                x0,
                method='COBYLA',
                tol=self.__config.convergence_tol,
                options=options
            )
        except BudgetExhausted:
            return False
        return bool(result.success)

    def __linear_step(
            self,
            evaluate: Callable[[NDArray[float64]], float],
            x0: NDArray[float64],
            f0: float
    ) -> bool:
        """
        One linear-approximation step: sample the simplex x0 + h e_k, fit the gradient from the
        forward differences and evaluate a single step of length h against it.
        """
        step: float = self.__config.initial_step
        gradient: NDArray[float64] = array(
            [(evaluate(vector=x0 + step * direction) - f0) / step for direction in eye(x0.size)]
        )
        magnitude: float = float(norm(gradient))
        if magnitude == 0.0:
            return True

        evaluate(vector=x0 - step * gradient / magnitude)
        return False
