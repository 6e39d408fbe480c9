import sys
import logging
import argparse
from pathlib import Path
from dataclasses import asdict, replace
from typing import Callable, Dict, List, Optional, Sequence

from pyqudec.engine.Engine import Engine
from pyqudec.channel.BlockCsv import BlockCsv
from pyqudec.engine.RunRecord import RunRecord
from pyqudec.errors import ConfigError, QuDecError
from pyqudec.engine.FigureTables import FigureTables
from pyqudec.engine.ResultWriter import ResultWriter
from pyqudec.engine.ExperimentSpec import ExperimentSpec
from pyqudec.resources.ResourceStudy import ResourceStudy

logger = logging.getLogger(__name__)


class Cli:
    EXIT_OK: int = 0
    EXIT_CONFIG: int = 2
    EXIT_RUNTIME: int = 3

    @staticmethod
    def parser() -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(prog='qudec', description='QAOA decoding workbench for LDPC and Polar codes')
        parser.add_argument('--log-level', default='WARNING', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'])
        commands = parser.add_subparsers(dest='command', required=True)

        def command(name: str, help_text: str) -> argparse.ArgumentParser:
            sub = commands.add_parser(name, help=help_text)
            sub.add_argument('--config', required=True, type=Path, help='JSON config file')
            sub.add_argument('--out', type=Path, default=None, help='Output directory (default: output_dir of the config)')
            sub.add_argument('--no-progress', action='store_true', help='Disable progress bars')
            return sub

        command('encode', 'Generate received blocks and write blocks.csv')
        command('decode', 'Decode a blocks.csv').add_argument('--blocks', required=True, type=Path)
        command('bench', 'Run a decoding experiment').add_argument(
            '--trace', action='store_true', help='Also record the p = 1 convergence trace'
        )
        command('noise-sweep', 'Expected energy under depolarizing noise').add_argument(
            '--rates', default=None, help='Comma-separated two-qubit error rates'
        )
        command('resources', 'Gate-duration and qubit tables')
        return parser

    @staticmethod
    def __spec(args: argparse.Namespace) -> ExperimentSpec:
        spec: ExperimentSpec = ExperimentSpec.from_json(path=args.config)
        return replace(spec, progress=False) if args.no_progress else spec

    @staticmethod
    def __writer(args: argparse.Namespace, default: str) -> ResultWriter:
        writer: ResultWriter = ResultWriter(out_dir=args.out or Path(default))
        writer.clear_failure()
        return writer

    @classmethod
    def encode(cls, args: argparse.Namespace) -> None:
        spec: ExperimentSpec = cls.__spec(args=args)
        engine: Engine = Engine(spec=spec)
        writer: ResultWriter = cls.__writer(args=args, default=spec.output_dir)

        blocks, (header, rows) = engine.encode_blocks()
        BlockCsv.write(path=writer.out_dir / 'blocks.csv', blocks=blocks)
        writer.write_table(name='sent', header=header, rows=rows)
        writer.write_metadata(metadata=engine.metadata(operation='encode'))

    @classmethod
    def decode(cls, args: argparse.Namespace) -> None:
        spec: ExperimentSpec = cls.__spec(args=args)
        engine: Engine = Engine(spec=spec)
        writer: ResultWriter = cls.__writer(args=args, default=spec.output_dir)
        engine.decode_blocks(blocks=BlockCsv.read(path=args.blocks), writer=writer)

    @staticmethod
    def __write_figures(writer: ResultWriter, record: RunRecord) -> None:
        for figure, (header, rows) in FigureTables.tables(record=record).items():
            writer.write_table(name=figure, header=header, rows=rows)

    @classmethod
    def bench(cls, args: argparse.Namespace) -> None:
        spec: ExperimentSpec = cls.__spec(args=args)
        engine: Engine = Engine(spec=spec)
        writer: ResultWriter = cls.__writer(args=args, default=spec.output_dir)

        record: RunRecord = engine.run_experiment(writer=writer)
        if args.trace:
            record.tables.update(engine.convergence_trace().tables)
            writer.write_record(record=record)
        cls.__write_figures(writer=writer, record=record)

    @classmethod
    def noise_sweep(cls, args: argparse.Namespace) -> None:
        spec: ExperimentSpec = cls.__spec(args=args)
        rates: Optional[List[float]] = None
        if args.rates:
            try:
                rates = [float(rate) for rate in args.rates.split(',')]
            except ValueError as error:
                raise ConfigError(f'Bad --rates {args.rates!r}') from error

        engine: Engine = Engine(spec=spec)
        writer: ResultWriter = cls.__writer(args=args, default=spec.output_dir)
        cls.__write_figures(writer=writer, record=engine.noise_sweep(error_rates=rates, writer=writer))

    @classmethod
    def resources(cls, args: argparse.Namespace) -> None:
        study: ResourceStudy = ResourceStudy.from_json(path=args.config)
        writer: ResultWriter = cls.__writer(args=args, default='results')
        record: RunRecord = RunRecord(
            metadata={'operation': 'resources', 'study': asdict(study)},
            tables=study.tables()
        )
        writer.write_record(record=record)
        cls.__write_figures(writer=writer, record=record)

    @classmethod
    def run(cls, argv: Optional[Sequence[str]] = None) -> int:
        args: argparse.Namespace = cls.parser().parse_args(argv)
        logging.basicConfig(
            level=getattr(logging, args.log_level),
            format='%(asctime)s %(levelname)s %(name)s: %(message)s'
        )

        commands: Dict[str, Callable[[argparse.Namespace], None]] = {
            'encode': cls.encode,
            'decode': cls.decode,
            'bench': cls.bench,
            'noise-sweep': cls.noise_sweep,
            'resources': cls.resources,
        }
        try:
            commands[args.command](args)
        except ConfigError as error:
            logger.error('Configuration error: %s', error)
            return cls.EXIT_CONFIG
        except (QuDecError, ValueError, ArithmeticError, OSError) as error:
            logger.error('%s failed: %s', args.command, error)
            return cls.EXIT_RUNTIME
        return cls.EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    return Cli.run(argv=argv)


if __name__ == '__main__':
    sys.exit(main())
