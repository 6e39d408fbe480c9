import json
from pathlib import Path
from dataclasses import dataclass, field, fields, replace
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from pyqudec.errors import ConfigError
from pyqudec.resources.Topology import Topology
from pyqudec.resources.PpsScenario import PpsScenario
from pyqudec.resources.ResourceParams import ResourceParams
from pyqudec.resources.ResourceEstimator import ResourceEstimator
from pyqudec.codes.ParityCheckMatrix import ParityCheckMatrix


@dataclass(frozen=True)
class ResourceStudy:
    params: ResourceParams = field(default_factory=ResourceParams)
    subblocks: Tuple[int, ...] = (128,)
    budgets_us: Tuple[float, ...] = (50.0, 40.0, 30.0, 20.0, 10.0, 1.0)
    pps_table: Tuple[PpsScenario, ...] = ()
    qubits_per_problem: float = 0.0
    t_run_us: float = 0.0
    topology: Optional[str] = None
    h_file: Optional[str] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, 'subblocks', tuple(int(size) for size in self.subblocks))
        object.__setattr__(self, 'budgets_us', tuple(float(budget) for budget in self.budgets_us))
        object.__setattr__(self, 'pps_table', tuple(self.pps_table))
        if self.topology is not None:
            object.__setattr__(
                self, 'params', replace(self.params, depth_coeff=Topology.from_name(name=self.topology).value)
            )

    def estimator(self) -> ResourceEstimator:
        return ResourceEstimator(
            parity_check=None if self.h_file is None else ParityCheckMatrix.load(path=Path(self.h_file))
        )

    def tables(self) -> Dict[str, Tuple[List[str], List[Sequence[Any]]]]:
        estimator: ResourceEstimator = self.estimator()
        durations = estimator.gate_duration_table(
            params=self.params, subblocks=self.subblocks, budgets_us=self.budgets_us
        )
        qubits = estimator.qubit_table(
            scenarios=self.pps_table, qubits_per_problem=self.qubits_per_problem, t_run=self.t_run_us * 1e-6
        )
        return {
            'gate_durations': (
                ['subblock', 'n_v', 'budget_us', 'required_gd_ns'],
                [[row.subblock, row.n_v, row.budget_us, row.required_gd_ns] for row in durations]
            ),
            'qubits': (
                ['bandwidth_mhz', 'antennas', 'pps', 'qubits'],
                [[row.bandwidth_mhz, row.antennas, row.pps, row.qubits] for row in qubits]
            )
        }

    @classmethod
    def from_mapping(cls, values: Mapping[str, Any], base_dir: Optional[Path] = None) -> 'ResourceStudy':
        unknown = set(values) - {study_field.name for study_field in fields(cls)}
        if unknown:
            raise ConfigError(f'Unknown resource study keys {sorted(unknown)}')

        values = dict(values)
        try:
            values['params'] = ResourceParams.from_mapping(values=values.get('params', {}))
            values['pps_table'] = tuple(PpsScenario(**scenario) for scenario in values.get('pps_table', ()))
            if values.get('h_file') and base_dir is not None and not Path(values['h_file']).is_absolute():
                values['h_file'] = str(base_dir / values['h_file'])
            return cls(**values)
        except (TypeError, ValueError) as error:
            raise ConfigError(f'Invalid resource study: {error}') from error

    @classmethod
    def from_json(cls, path: Path | str) -> 'ResourceStudy':
        path = Path(path)
        try:
            values: Any = json.loads(path.read_text(encoding='utf-8'))
        except (OSError, json.JSONDecodeError) as error:
            raise ConfigError(f'Cannot read config {path}: {error}') from error
        if not isinstance(values, dict):
            raise ConfigError(f'Config {path} must hold a JSON object')
        return cls.from_mapping(values=values, base_dir=path.parent)
