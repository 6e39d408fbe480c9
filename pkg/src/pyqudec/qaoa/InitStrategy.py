from abc import ABC, abstractmethod

from pyqudec.qaoa.AnsatzParams import AnsatzParams


class InitStrategy(ABC):
    @property
    @abstractmethod
    def name(self) -> str:
        ...

    @abstractmethod
    def initial_params(self, p: int) -> AnsatzParams:
        ...
