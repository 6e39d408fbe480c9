import logging
from math import sqrt
from time import perf_counter_ns
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple, TypeVar

from tqdm import tqdm
from numpy.typing import NDArray
from numpy import uint8, array, count_nonzero

from pyqudec.qubo.Qubo import Qubo
from pyqudec.channel.Frame import Frame
from pyqudec.channel.FrameGrouper import FrameGrouper
from pyqudec.channel.ReceivedBlock import ReceivedBlock
from pyqudec.codes.FecCode import FecCode
from pyqudec.qaoa.ZeroInit import ZeroInit
from pyqudec.engine.Problem import Problem
from pyqudec.engine.RunRecord import RunRecord, Table
from pyqudec.engine.ResultRow import ResultRow
from pyqudec.qaoa.RandomInit import RandomInit
from pyqudec.qsim.NoiseModel import NoiseModel
from pyqudec.classical.BpConfig import BpConfig
from pyqudec.engine.SeedMixer import SeedMixer
from pyqudec.qubo.QuboBuilder import QuboBuilder
from pyqudec.qaoa.QaoaDecoder import QaoaDecoder
from pyqudec.qaoa.WarmStarter import WarmStarter
from pyqudec.classical.SclConfig import SclConfig
from pyqudec.engine.SeedStream import SeedStream
from pyqudec.classical.MlDecoder import MlDecoder
from pyqudec.qaoa.TemporalInit import TemporalInit
from pyqudec.qaoa.DecodeResult import DecodeResult
from pyqudec.qaoa.InitStrategy import InitStrategy
from pyqudec.qaoa.AnsatzParams import AnsatzParams
from pyqudec.engine.BlockSource import BlockSource
from pyqudec.qaoa.QaoaObjective import QaoaObjective
from pyqudec.channel.AwgnChannel import AwgnChannel
from pyqudec.classical.SclDecoder import SclDecoder
from pyqudec.codes.BenchmarkCodes import BenchmarkCodes
from pyqudec.qaoa.OptimizerConfig import OptimizerConfig
from pyqudec.engine.ResultWriter import ResultWriter
from pyqudec.qubo.CoefficientSpread import CoefficientSpread
from pyqudec.qubo.BruteForceSolver import BruteForceSolver
from pyqudec.engine.ExperimentSpec import ExperimentSpec
from pyqudec.qsim.CircuitSimulator import CircuitSimulator
from pyqudec.qaoa.SolutionExtractor import SolutionExtractor
from pyqudec.qaoa.SimulationBackend import SimulationBackend
from pyqudec.qaoa.ParameterOptimizer import ParameterOptimizer
from pyqudec.qaoa.OptimizationOutcome import OptimizationOutcome
from pyqudec.classical.BeliefPropagationDecoder import BeliefPropagationDecoder
from pyqudec.errors import ConfigError, QuDecError, SizeLimit

logger = logging.getLogger(__name__)

T = TypeVar('T')

SNR_CONVENTION: str = 'Es/N0 per BPSK symbol (Es = 1): sigma^2 = 10^(-snr_db / 10), L = 2 y / sigma^2'
SEED_DERIVATION: str = 'splitmix64 chain over (master_seed, snr_index, problem_index, stream)'


class Engine:
    __spec: ExperimentSpec
    __code: FecCode
    __builder: QuboBuilder
    __seeds: SeedMixer
    __source: BlockSource
    __simulator: CircuitSimulator
    __warm_starter: WarmStarter
    __decoders: Dict[str, QaoaDecoder]
    __classical: Dict[str, Callable[[NDArray], Tuple[NDArray[uint8], NDArray[uint8]]]]
    __labels: Dict[str, str]

    def __init__(self, spec: ExperimentSpec) -> None:
        self.__spec = spec
        try:
            self.__code = BenchmarkCodes.from_mapping(fields=spec.code)
        except (ValueError, OSError) as error:
            raise ConfigError(f'Cannot build code {dict(spec.code)}: {error}') from error

        self.__builder = QuboBuilder.for_code(code=self.__code, eliminate_frozen=spec.eliminate_frozen)
        self.__seeds = SeedMixer(master_seed=spec.master_seed)
        self.__source = BlockSource(
            code=self.__code,
            channel=AwgnChannel(noiseless_variance_floor=spec.noiseless_variance_floor),
            seeds=self.__seeds,
            stride=max(spec.problems_per_snr, spec.noise_problems_per_snr) + 1
        )
        self.__simulator = CircuitSimulator(
            max_statevector_qubits=spec.max_statevector_qubits,
            max_density_qubits=spec.max_density_qubits
        )
        self.__warm_starter = WarmStarter(
            gamma0=spec.gamma0,
            beta0=spec.beta0,
            config=self.__tuned_config().with_budget(max_iterations=spec.warm_start_budget),
            scales=spec.warm_start_scales
        )
        self.__check_sizes()

        self.__decoders = {mode: self.__decoder(mode=mode) for mode in spec.modes}
        self.__classical = {}
        self.__labels = {}
        for baseline in spec.baselines:
            self.__add_baseline(name=baseline)

    @property
    def spec(self) -> ExperimentSpec:
        return self.__spec

    @property
    def code(self) -> FecCode:
        return self.__code

    @property
    def builder(self) -> QuboBuilder:
        return self.__builder

    @property
    def source(self) -> BlockSource:
        return self.__source

    def __check_sizes(self) -> None:
        n_vars: int = self.__builder.n_vars
        if self.__spec.init_strategies:
            if self.__spec.backend == 'noisy' and n_vars > self.__spec.max_density_qubits:
                raise ConfigError(
                    f'Noisy backend needs <= {self.__spec.max_density_qubits} QUBO variables, the code has {n_vars}'
                )
            if n_vars > self.__spec.max_statevector_qubits:
                raise ConfigError(
                    f'{n_vars} QUBO variables exceed the statevector cap of {self.__spec.max_statevector_qubits}'
                )

    def __tuned_config(self) -> OptimizerConfig:
        return OptimizerConfig(
            max_iterations=self.__spec.max_iterations,
            convergence_tol=self.__spec.convergence_tol,
            initial_step=self.__spec.initial_step
        )

    def __mode_config(self, mode: str) -> OptimizerConfig:
        match mode:
            case 'tuned':
                return self.__tuned_config()
            case 'one-iteration':
                return self.__tuned_config().with_budget(max_iterations=1)
            case _:
                raise ConfigError(f'Mode {mode!r} not found')

    def __decoder(self, mode: str) -> QaoaDecoder:
        return QaoaDecoder(
            code=self.__code,
            p=self.__spec.p_layers,
            config=self.__mode_config(mode=mode),
            simulator=self.__simulator,
            eliminate_frozen=self.__spec.eliminate_frozen,
            normalization_cap=self.__spec.normalization_cap,
            solver=BruteForceSolver(max_vars=self.__spec.brute_force_max_vars)
        )

    def __add_baseline(self, name: str) -> None:
        code: FecCode = self.__code
        match name:
            case 'bp':
                if code.family != 'ldpc':
                    raise ConfigError('The bp baseline needs an LDPC code')
                bp: BeliefPropagationDecoder = BeliefPropagationDecoder(
                    parity_check=code.parity_check,
                    config=BpConfig(max_iterations=self.__spec.bp_iterations)
                )
                positions: List[int] = list(code.data_positions)

                def decode_bp(llrs: NDArray) -> Tuple[NDArray[uint8], NDArray[uint8]]:
                    codeword: NDArray[uint8] = bp.decode(llrs=llrs)
                    return codeword[positions], codeword

                self.__classical[name], self.__labels[name] = decode_bp, 'BP'
            case 'scl':
                if code.family != 'polar':
                    raise ConfigError('The scl baseline needs a Polar code')
                scl: SclDecoder = SclDecoder(
                    config=code.config,
                    scl=SclConfig(list_size=self.__spec.scl_list_size or 2 ** code.k)
                )

                def decode_scl(llrs: NDArray) -> Tuple[NDArray[uint8], NDArray[uint8]]:
                    data: NDArray[uint8] = scl.decode(llrs=llrs)
                    return data, code.encode(data=data)

                self.__classical[name], self.__labels[name] = decode_scl, f'SCL-{scl.list_size}'
            case 'ml':
                ml: MlDecoder = MlDecoder(code=code, max_data_bits=self.__spec.ml_max_data_bits)

                def decode_ml(llrs: NDArray) -> Tuple[NDArray[uint8], NDArray[uint8]]:
                    data: NDArray[uint8] = ml.decode(llrs=llrs)
                    return data, code.encode(data=data)

                self.__classical[name], self.__labels[name] = decode_ml, 'ML'
            case _:
                raise ConfigError(f'Baseline {name!r} not found')

    def penalty_weight(self, frame: Frame) -> Optional[float]:
        match self.__spec.penalty_weight:
            case 'auto':
                return None
            case 'frame':
                return max(QuboBuilder.default_penalty_weight(llrs=block.llrs) for block in frame.blocks)
            case weight:
                return float(weight)

    def __map(self, function: Callable[[Problem], T], problems: Sequence[Problem], description: str) -> Iterator[T]:
        progress = dict(total=len(problems), desc=description, disable=not self.__spec.progress, leave=False)
        if self.__spec.workers == 1:
            yield from tqdm(map(function, problems), **progress)
            return
        with ThreadPoolExecutor(max_workers=self.__spec.workers) as executor:
            yield from tqdm(executor.map(function, problems), **progress)

    def __backend(self, snr_index: int, problem_index: int) -> SimulationBackend:
        match self.__spec.backend:
            case 'sampled':
                return SimulationBackend.sampled(
                    n_shots=self.__spec.n_shots,
                    seed=self.__seeds.seed(snr_index=snr_index, problem_index=problem_index, stream=SeedStream.SHOTS)
                )
            case 'noisy':
                return SimulationBackend.noisy(noise=NoiseModel(p1=self.__spec.noise_p1, p2=self.__spec.noise_p2))
            case _:
                return SimulationBackend.exact()

    def __extractor(self, snr_index: int, problem_index: int) -> SolutionExtractor:
        return SolutionExtractor(
            kind=self.__spec.extraction,
            top_m=self.__spec.top_m,
            n_shots=self.__spec.n_shots,
            seed=self.__seeds.seed(snr_index=snr_index, problem_index=problem_index, stream=SeedStream.SHOTS)
        )

    def __init_strategy(
            self,
            name: str,
            snr_index: int,
            problem_index: int,
            temporal: Optional[AnsatzParams]
    ) -> InitStrategy:
        match name:
            case 'temporal':
                return TemporalInit(params=temporal)
            case 'random':
                return RandomInit(seed=self.__seeds.seed(
                    snr_index=snr_index, problem_index=problem_index, stream=SeedStream.RANDOM_INIT
                ))
            case 'zero':
                return ZeroInit()
            case _:
                raise ConfigError(f'Init strategy {name!r} not found')

    @staticmethod
    def __errors(decoded: NDArray[uint8], sent: NDArray[uint8]) -> int:
        return int(count_nonzero(decoded != sent))

    def __qaoa_row(self, problem: Problem, mode: str, strategy: str, result: DecodeResult, elapsed_ns: int) -> ResultRow:
        return ResultRow(
            block_id=problem.block.block_id,
            snr_db=problem.block.snr_db,
            init_strategy=strategy,
            mode=mode,
            p=self.__spec.p_layers,
            iterations_used=result.iterations_used,
            energy=result.energy,
            normalized_energy=result.normalized_energy,
            expected_energy=result.expected_energy,
            normalized_expected_energy=result.normalized_expected_energy,
            bit_errors=self.__errors(decoded=result.data_bits, sent=problem.data),
            codeword_bit_errors=self.__errors(decoded=result.codeword_bits, sent=problem.codeword),
            converged=result.converged,
            wall_time_us=elapsed_ns / 1e3
        )

    def __classical_row(self, problem: Problem, name: str) -> ResultRow:
        start: int = perf_counter_ns()
        data, codeword = self.__classical[name](problem.block.llrs)
        elapsed: int = perf_counter_ns() - start
        return ResultRow(
            block_id=problem.block.block_id,
            snr_db=problem.block.snr_db,
            init_strategy=self.__labels[name],
            mode='classical',
            p=None,
            iterations_used=None,
            energy=None,
            normalized_energy=None,
            expected_energy=None,
            normalized_expected_energy=None,
            bit_errors=self.__errors(decoded=data, sent=problem.data),
            codeword_bit_errors=self.__errors(decoded=codeword, sent=problem.codeword),
            converged=None,
            wall_time_us=elapsed / 1e3
        )

    def decode_problem(
            self,
            problem: Problem,
            temporal: Optional[AnsatzParams],
            penalty_weight: Optional[float]
    ) -> List[ResultRow]:
        rows: List[ResultRow] = []
        for mode, decoder in self.__decoders.items():
            for strategy in self.__spec.init_strategies:
                start: int = perf_counter_ns()
                result: DecodeResult = decoder.decode_block(
                    block=problem.block,
                    init=self.__init_strategy(
                        name=strategy, snr_index=problem.snr_index, problem_index=problem.problem_index, temporal=temporal
                    ),
                    penalty_weight=penalty_weight,
                    backend=self.__backend(snr_index=problem.snr_index, problem_index=problem.problem_index),
                    extractor=self.__extractor(snr_index=problem.snr_index, problem_index=problem.problem_index)
                )
                rows.append(self.__qaoa_row(
                    problem=problem, mode=mode, strategy=strategy, result=result,
                    elapsed_ns=perf_counter_ns() - start
                ))
        rows.extend(self.__classical_row(problem=problem, name=name) for name in self.__spec.baselines)
        return rows

    def __warm_start(self, frame: Frame, p: int, penalty_weight: Optional[float]) -> OptimizationOutcome:
        return self.__warm_starter.search(frame=frame, builder=self.__builder, p=p, penalty_weight=penalty_weight)

    def __spread_rows(self, snr_db: float, problems: Sequence[Problem], penalty_weight: Optional[float]) -> List[List[Any]]:
        qubos: List[Qubo] = [
            self.__builder.build(llrs=problem.block.llrs, penalty_weight=penalty_weight) for problem in problems
        ]
        return [
            [snr_db, spread.i, spread.j, spread.minimum, spread.maximum, spread.relative_spread, spread.constant]
            for spread in CoefficientSpread.of(qubos=qubos)
        ]

    def metadata(self, operation: str) -> Dict[str, Any]:
        return {
            'operation': operation,
            'snr_convention': SNR_CONVENTION,
            'seed_derivation': SEED_DERIVATION,
            'code': {
                'family': self.__code.family,
                'n': self.__code.n,
                'k': self.__code.k,
                'data_positions': list(self.__code.data_positions),
                'qubo_vars': self.__builder.n_vars,
                'logical_vars': self.__builder.logical_vars
            },
            'decoder_defaults': {
                'bp_iterations': self.__spec.bp_iterations,
                'scl_list_size': self.__spec.scl_list_size or 2 ** self.__code.k,
                'top_m': self.__spec.top_m,
                'warm_start_budget': self.__spec.warm_start_budget,
                'warm_start_scales': list(self.__spec.warm_start_scales),
                'max_iterations': self.__spec.max_iterations,
                'optimizer': 'COBYLA',
                'penalty_weight': self.__spec.penalty_weight
            },
            'spec': self.__spec.to_mapping()
        }

    def __finish(self, record: RunRecord, writer: Optional[ResultWriter]) -> RunRecord:
        if writer is not None:
            writer.write_record(record=record)
        return record

    def __fail(self, record: RunRecord, writer: Optional[ResultWriter], error: Exception) -> None:
        logger.error('%s aborted: %s', record.metadata.get('operation'), error)
        if writer is not None:
            writer.write_record(record=record)
            writer.mark_failed(error=error)

    @staticmethod
    def __bits(bits: NDArray[uint8]) -> str:
        return ''.join(str(int(bit)) for bit in bits)

    def encode_blocks(self) -> Tuple[List[ReceivedBlock], Table]:
        blocks: List[ReceivedBlock] = []
        sent: List[List[Any]] = []
        for snr_index, snr_db in enumerate(self.__spec.snr_list_db):
            problems: List[Problem] = [
                self.__source.problem(snr_index=snr_index, snr_db=snr_db, problem_index=0, preamble=True)
            ] + [
                self.__source.problem(snr_index=snr_index, snr_db=snr_db, problem_index=index)
                for index in range(self.__spec.problems_per_snr)
            ]
            for problem in problems:
                blocks.append(problem.block)
                sent.append([problem.block.block_id, snr_db, self.__bits(problem.data), self.__bits(problem.codeword)])
        return blocks, (['block_id', 'snr_db', 'data_bits', 'codeword_bits'], sent)

    def decode_blocks(self, blocks: Sequence[ReceivedBlock], writer: Optional[ResultWriter] = None) -> RunRecord:
        frames: List[Frame] = FrameGrouper(step_db=self.__spec.snr_step_db).group_by_snr(blocks=blocks)
        header: List[str] = [
            'block_id', 'snr_db', 'init_strategy', 'mode', 'data_bits', 'codeword_bits', 'energy',
            'expected_energy', 'iterations_used', 'converged'
        ]
        decoded: List[List[Any]] = []
        record: RunRecord = RunRecord(metadata=self.metadata(operation='decode'))
        record.tables['decoded'] = (header, decoded)

        def decode_one(frame_index: int, block: ReceivedBlock, temporal: Optional[AnsatzParams],
                       weight: Optional[float]) -> List[List[Any]]:
            rows: List[List[Any]] = []
            for mode, decoder in self.__decoders.items():
                for strategy in self.__spec.init_strategies:
                    result: DecodeResult = decoder.decode_block(
                        block=block,
                        init=self.__init_strategy(
                            name=strategy, snr_index=frame_index, problem_index=block.block_id, temporal=temporal
                        ),
                        penalty_weight=weight,
                        backend=self.__backend(snr_index=frame_index, problem_index=block.block_id),
                        extractor=self.__extractor(snr_index=frame_index, problem_index=block.block_id)
                    )
                    rows.append([
                        block.block_id, block.snr_db, strategy, mode, self.__bits(result.data_bits),
                        self.__bits(result.codeword_bits), result.energy, result.expected_energy,
                        result.iterations_used, result.converged
                    ])
            for name in self.__spec.baselines:
                data, codeword = self.__classical[name](block.llrs)
                rows.append([
                    block.block_id, block.snr_db, self.__labels[name], 'classical', self.__bits(data),
                    self.__bits(codeword), None, None, None, None
                ])
            return rows

        try:
            for frame_index, frame in enumerate(frames):
                weight: Optional[float] = self.penalty_weight(frame=frame)
                temporal: Optional[AnsatzParams] = None
                if 'temporal' in self.__spec.init_strategies:
                    temporal = self.__warm_start(frame=frame, p=self.__spec.p_layers, penalty_weight=weight).params
                for block in tqdm(frame.payload, desc=f'{frame.snr_db:g} dB', disable=not self.__spec.progress):
                    decoded.extend(decode_one(frame_index=frame_index, block=block, temporal=temporal, weight=weight))
        except (QuDecError, ValueError, ArithmeticError) as error:
            self.__fail(record=record, writer=writer, error=error)
            raise

        return self.__finish(record=record, writer=writer)

    def run_experiment(self, writer: Optional[ResultWriter] = None) -> RunRecord:
        record: RunRecord = RunRecord(metadata=self.metadata(operation='run_experiment'))
        spread_rows: List[List[Any]] = []
        try:
            for snr_index, snr_db in enumerate(self.__spec.snr_list_db):
                frame, problems = self.__source.frame(
                    snr_index=snr_index, snr_db=snr_db, problems=self.__spec.problems_per_snr
                )
                weight: Optional[float] = self.penalty_weight(frame=frame)
                temporal: Optional[AnsatzParams] = None
                if 'temporal' in self.__spec.init_strategies:
                    temporal = self.__warm_start(frame=frame, p=self.__spec.p_layers, penalty_weight=weight).params

                logger.info('Decoding %d blocks at %.3g dB', len(problems), snr_db)
                for rows in self.__map(
                        function=lambda problem: self.decode_problem(
                            problem=problem, temporal=temporal, penalty_weight=weight
                        ),
                        problems=problems,
                        description=f'{snr_db:g} dB'
                ):
                    record.rows.extend(rows)
                spread_rows.extend(self.__spread_rows(snr_db=snr_db, problems=problems, penalty_weight=weight))
        except (QuDecError, ValueError, ArithmeticError) as error:
            record.aggregates = RunRecord.aggregate(rows=record.rows, data_bits=self.__code.k)
            self.__fail(record=record, writer=writer, error=error)
            raise

        record.aggregates = RunRecord.aggregate(rows=record.rows, data_bits=self.__code.k)
        record.tables['coefficient_spread'] = (
            ['snr_db', 'i', 'j', 'minimum', 'maximum', 'relative_spread', 'constant'],
            spread_rows
        )
        return self.__finish(record=record, writer=writer)

    def noise_sweep(
            self,
            error_rates: Optional[Sequence[float]] = None,
            writer: Optional[ResultWriter] = None
    ) -> RunRecord:
        rates: Tuple[float, ...] = tuple(self.__spec.error_rates if error_rates is None else error_rates)
        if self.__builder.n_vars > self.__spec.max_density_qubits:
            raise SizeLimit(
                f'{self.__builder.n_vars} QUBO variables exceed the density cap of {self.__spec.max_density_qubits}'
            )

        decoder: QaoaDecoder = self.__decoder(mode='one-iteration')
        record: RunRecord = RunRecord(metadata=self.metadata(operation='noise_sweep'))
        header: List[str] = [
            'snr_db', 'error_rate', 'p1', 'p2', 'problems', 'mean_expected_energy', 'std_error',
            'mean_normalized_expected_energy', 'mean_bit_errors'
        ]
        cells: List[List[Any]] = []
        record.tables['noise_sweep'] = (header, cells)
        try:
            for snr_index, snr_db in enumerate(self.__spec.snr_list_db):
                frame, problems = self.__source.frame(
                    snr_index=snr_index, snr_db=snr_db, problems=self.__spec.noise_problems_per_snr
                )
                weight: Optional[float] = self.penalty_weight(frame=frame)
                init: TemporalInit = TemporalInit(
                    params=self.__warm_start(frame=frame, p=self.__spec.p_layers, penalty_weight=weight).params
                )

                for rate in rates:
                    noise: NoiseModel = NoiseModel.from_two_qubit_rate(rate=rate, one_qubit_ratio=self.__spec.noise_ratio)
                    backend: SimulationBackend = SimulationBackend.noisy(noise=noise)
                    results: List[DecodeResult] = list(self.__map(
                        function=lambda problem: decoder.decode_block(
                            block=problem.block, init=init, penalty_weight=weight, backend=backend
                        ),
                        problems=problems,
                        description=f'{snr_db:g} dB, rate {rate:g}'
                    ))
                    expected = array([result.expected_energy for result in results])
                    normalized = [result.normalized_expected_energy for result in results]
                    cells.append([
                        snr_db,
                        rate,
                        noise.p1,
                        noise.p2,
                        len(results),
                        float(expected.mean()),
                        float(expected.std(ddof=1) / sqrt(expected.size)) if expected.size > 1 else 0.0,
                        None if None in normalized else float(array(normalized).mean()),
                        sum(
                            self.__errors(decoded=result.data_bits, sent=problem.data)
                            for result, problem in zip(results, problems)
                        ) / len(results)
                    ])
                    logger.info('Noise sweep %.3g dB, rate %.3g: mean energy %.6g', snr_db, rate, cells[-1][5])
        except (QuDecError, ValueError, ArithmeticError) as error:
            self.__fail(record=record, writer=writer, error=error)
            raise

        return self.__finish(record=record, writer=writer)

    def convergence_trace(self, writer: Optional[ResultWriter] = None) -> RunRecord:
        snr_db: float = self.__spec.snr_list_db[0]
        frame, problems = self.__source.frame(snr_index=0, snr_db=snr_db, problems=1)
        weight: Optional[float] = self.penalty_weight(frame=frame)

        objective: QaoaObjective = QaoaObjective(
            qubo=self.__builder.build(llrs=problems[0].block.llrs, penalty_weight=weight),
            simulator=self.__simulator
        )
        optimizer: ParameterOptimizer = ParameterOptimizer(config=self.__tuned_config())
        starts: Tuple[InitStrategy, ...] = (
            TemporalInit(params=self.__warm_start(frame=frame, p=1, penalty_weight=weight).params),
            self.__init_strategy(name='random', snr_index=0, problem_index=0, temporal=None)
        )

        rows: List[List[Any]] = []
        for start in starts:
            outcome: OptimizationOutcome = optimizer.optimize(objective=objective, init=start.initial_params(p=1))
            rows.extend([start.name, evaluation + 1, best] for evaluation, best in enumerate(outcome.history))

        record: RunRecord = RunRecord(metadata=self.metadata(operation='convergence_trace'))
        record.tables['trace'] = (['init_strategy', 'evaluation', 'best_expected_energy'], rows)
        return self.__finish(record=record, writer=writer)

    def coefficient_spread(self, writer: Optional[ResultWriter] = None) -> RunRecord:
        rows: List[List[Any]] = []
        for snr_index, snr_db in enumerate(self.__spec.snr_list_db):
            frame, problems = self.__source.frame(
                snr_index=snr_index, snr_db=snr_db, problems=self.__spec.problems_per_snr
            )
            rows.extend(self.__spread_rows(snr_db=snr_db, problems=problems, penalty_weight=self.penalty_weight(frame=frame)))

        record: RunRecord = RunRecord(metadata=self.metadata(operation='coefficient_spread'))
        record.tables['coefficient_spread'] = (
            ['snr_db', 'i', 'j', 'minimum', 'maximum', 'relative_spread', 'constant'],
            rows
        )
        return self.__finish(record=record, writer=writer)
