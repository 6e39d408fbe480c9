from dataclasses import dataclass

from pyqudec.errors import InvalidParameter
from pyqudec.qaoa.AnsatzParams import AnsatzParams
from pyqudec.qaoa.InitStrategy import InitStrategy


@dataclass(frozen=True)
class TemporalInit(InitStrategy):
    params: AnsatzParams

    @property
    def name(self) -> str:
        return 'temporal'

    def initial_params(self, p: int) -> AnsatzParams:
        if p != self.params.p:
            raise InvalidParameter(f'Warm-start angles have p={self.params.p}, decoder runs p={p}')
        return self.params
