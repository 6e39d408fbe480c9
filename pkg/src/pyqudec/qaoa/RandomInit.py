from math import pi
from dataclasses import dataclass

from numpy.random import default_rng, Generator

from pyqudec.qaoa.AnsatzParams import AnsatzParams
from pyqudec.qaoa.InitStrategy import InitStrategy


@dataclass(frozen=True)
class RandomInit(InitStrategy):
    seed: int

    @property
    def name(self) -> str:
        return 'random'

    def initial_params(self, p: int) -> AnsatzParams:
        rng: Generator = default_rng(self.seed)
        return AnsatzParams(
            gammas=tuple(rng.uniform(0.0, pi, size=p)),
            betas=tuple(rng.uniform(0.0, pi, size=p))
        )
