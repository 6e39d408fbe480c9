import json
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Tuple
from dataclasses import dataclass, field, fields, asdict

from pyqudec.errors import ConfigError


@dataclass(frozen=True)
class ExperimentSpec:
    code: Mapping[str, Any] = field(default_factory=lambda: {'family': 'polar', 'n': 4, 'k': 2})
    snr_list_db: Tuple[float, ...] = (0.0, 2.0, 4.0, 6.0)
    problems_per_snr: int = 500
    p_layers: int = 4
    init_strategies: Tuple[str, ...] = ('temporal', 'random', 'zero')
    modes: Tuple[str, ...] = ('tuned',)
    backend: str = 'exact'
    n_shots: int = 1024
    noise_p1: float = 0.0
    noise_p2: float = 0.0
    extraction: str = 'exact'
    top_m: int = 128
    baselines: Tuple[str, ...] = ()
    master_seed: int = 0
    output_dir: str = 'results'
    penalty_weight: str | float = 'frame'
    eliminate_frozen: bool = True
    max_iterations: int = 200
    convergence_tol: float = 1e-4
    initial_step: float = 0.1
    warm_start_budget: int = 500
    gamma0: float = 0.5
    beta0: float = 0.5
    warm_start_scales: Tuple[float, ...] = (0.25, 0.5, 1.0, 2.0, 4.0)
    bp_iterations: int = 50
    scl_list_size: Optional[int] = None
    ml_max_data_bits: int = 20
    brute_force_max_vars: int = 24
    max_statevector_qubits: int = 20
    max_density_qubits: int = 8
    normalization_cap: int = 16
    noiseless_variance_floor: float = 1e-2
    snr_step_db: float = 1.0
    error_rates: Tuple[float, ...] = (1.0, 1e-1, 1e-2, 1e-3, 1e-4, 0.0)
    noise_ratio: float = 1.0
    noise_problems_per_snr: int = 100
    workers: int = 1
    progress: bool = True

    STRATEGIES = ('temporal', 'random', 'zero')
    MODES = ('tuned', 'one-iteration')
    BACKENDS = ('exact', 'sampled', 'noisy')
    BASELINES = ('bp', 'scl', 'ml')

    def __post_init__(self) -> None:
        for name in ('snr_list_db', 'init_strategies', 'modes', 'baselines', 'error_rates', 'warm_start_scales'):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        object.__setattr__(self, 'code', dict(self.code))

        if not self.snr_list_db:
            raise ConfigError('snr_list_db is empty')
        for name in ('problems_per_snr', 'p_layers', 'n_shots', 'top_m', 'warm_start_budget', 'bp_iterations',
                     'noise_problems_per_snr', 'workers'):
            if int(getattr(self, name)) < 1:
                raise ConfigError(f'{name} must be >= 1, got {getattr(self, name)}')
        self.__check_subset(name='init_strategies', allowed=self.STRATEGIES)
        self.__check_subset(name='modes', allowed=self.MODES)
        self.__check_subset(name='baselines', allowed=self.BASELINES)
        if not self.modes:
            raise ConfigError('modes is empty')
        if not self.init_strategies and not self.baselines:
            raise ConfigError('Nothing to decode: no init strategy and no baseline')
        if self.backend not in self.BACKENDS:
            raise ConfigError(f'backend {self.backend!r} not in {self.BACKENDS}')
        if self.extraction not in ('exact', 'sampled'):
            raise ConfigError(f'extraction {self.extraction!r} is neither exact nor sampled')
        if isinstance(self.penalty_weight, str):
            if self.penalty_weight not in ('frame', 'auto'):
                raise ConfigError(f'penalty_weight {self.penalty_weight!r} is not frame, auto or a number')
        elif self.penalty_weight <= 0:
            raise ConfigError(f'penalty_weight must be positive, got {self.penalty_weight}')
        if self.scl_list_size is not None and self.scl_list_size < 1:
            raise ConfigError(f'scl_list_size must be >= 1, got {self.scl_list_size}')
        if not 0.0 <= self.noise_p1 <= 1.0 or not 0.0 <= self.noise_p2 <= 1.0:
            raise ConfigError('noise_p1 and noise_p2 must lie in [0, 1]')
        if self.normalization_cap > self.brute_force_max_vars:
            raise ConfigError(
                f'normalization_cap {self.normalization_cap} exceeds brute_force_max_vars {self.brute_force_max_vars}'
            )
        if not self.warm_start_scales or any(scale <= 0 for scale in self.warm_start_scales):
            raise ConfigError('warm_start_scales must be a non-empty list of positive factors')
        if any(not 0.0 <= rate <= 1.0 for rate in self.error_rates):
            raise ConfigError('error_rates must lie in [0, 1]')
        if self.snr_step_db <= 0 or self.noiseless_variance_floor <= 0 or self.noise_ratio < 0:
            raise ConfigError('snr_step_db and noiseless_variance_floor must be positive, noise_ratio non-negative')

    def __check_subset(self, name: str, allowed: Tuple[str, ...]) -> None:
        unknown = set(getattr(self, name)) - set(allowed)
        if unknown:
            raise ConfigError(f'{name} has unknown entries {sorted(unknown)}; allowed {allowed}')

    @property
    def family(self) -> str:
        return str(self.code.get('family', '')).lower()

    def to_mapping(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_mapping(cls, values: Mapping[str, Any], base_dir: Optional[Path] = None) -> 'ExperimentSpec':
        known = {spec_field.name for spec_field in fields(cls)}
        unknown = set(values) - known
        if unknown:
            raise ConfigError(f'Unknown experiment keys {sorted(unknown)}')

        values = dict(values)
        code: Dict[str, Any] = dict(values.get('code', {'family': 'polar', 'n': 4, 'k': 2}))
        if base_dir is not None and code.get('h_file') and not Path(code['h_file']).is_absolute():
            code['h_file'] = str(base_dir / code['h_file'])
        values['code'] = code

        try:
            return cls(**values)
        except TypeError as error:
            raise ConfigError(f'Invalid experiment config: {error}') from error

    @classmethod
    def from_json(cls, path: Path | str) -> 'ExperimentSpec':
        path = Path(path)
        try:
            values: Any = json.loads(path.read_text(encoding='utf-8'))
        except (OSError, json.JSONDecodeError) as error:
            raise ConfigError(f'Cannot read config {path}: {error}') from error
        if not isinstance(values, dict):
            raise ConfigError(f'Config {path} must hold a JSON object')
        return cls.from_mapping(values=values, base_dir=path.parent)
