from dataclasses import dataclass, replace

from pyqudec.errors import InvalidParameter


@dataclass(frozen=True)
class OptimizerConfig:
    """
    ``max_iterations`` counts objective evaluations: 0 leaves the COBYLA default budget, 1 selects
    the single linear-model step of the one-iteration deployment, larger values cap COBYLA.
    """
    max_iterations: int = 0
    convergence_tol: float = 1e-4
    initial_step: float = 0.1

    def __post_init__(self) -> None:
        if self.max_iterations < 0:
            raise InvalidParameter(f'max_iterations must be >= 0, got {self.max_iterations}')
        if self.initial_step <= 0 or self.convergence_tol <= 0:
            raise InvalidParameter('initial_step and convergence_tol must be positive')

    @property
    def one_iteration(self) -> bool:
        return self.max_iterations == 1

    def with_budget(self, max_iterations: int) -> 'OptimizerConfig':
        return replace(self, max_iterations=max_iterations)
