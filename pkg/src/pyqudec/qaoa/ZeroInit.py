from dataclasses import dataclass

from pyqudec.qaoa.AnsatzParams import AnsatzParams
from pyqudec.qaoa.InitStrategy import InitStrategy


@dataclass(frozen=True)
class ZeroInit(InitStrategy):
    value: float = 1e-4

    @property
    def name(self) -> str:
        return 'zero'

    def initial_params(self, p: int) -> AnsatzParams:
        return AnsatzParams.constant(p=p, value=self.value)
