from typing import Any, Callable, Dict

import pytest

from pyqudec.codes import BenchmarkCodes, LdpcCode, ParityCheckMatrix, PolarCode
from pyqudec.engine import ExperimentSpec


@pytest.fixture(scope='session')
def polar_12() -> PolarCode:
    return BenchmarkCodes.polar_12()


@pytest.fixture(scope='session')
def polar_4() -> PolarCode:
    return BenchmarkCodes.polar_4()


@pytest.fixture(scope='session')
def ldpc_13() -> LdpcCode:
    return BenchmarkCodes.ldpc_13()


@pytest.fixture(scope='session')
def repetition_3() -> LdpcCode:
    return LdpcCode(parity_check=ParityCheckMatrix(rows=[(0, 1), (1, 2)], number_bits=3))


@pytest.fixture
def small_spec() -> Callable[..., ExperimentSpec]:
    """Fast Polar (4, 2) experiment; keyword overrides replace any field."""

    def build(**overrides: Any) -> ExperimentSpec:
        values: Dict[str, Any] = dict(
            code={'family': 'polar', 'n': 4, 'k': 2},
            snr_list_db=(4.0,),
            problems_per_snr=2,
            p_layers=1,
            init_strategies=('temporal', 'zero'),
            modes=('one-iteration',),
            warm_start_budget=10,
            max_iterations=10,
            master_seed=3,
            progress=False
        )
        values.update(overrides)
        return ExperimentSpec(**values)

    return build
