import csv
import json
import logging
from pathlib import Path
from typing import Any, List, Sequence

from numpy import bool_, floating, integer

from pyqudec.engine.RunRecord import RunRecord
from pyqudec.engine.ResultRow import ResultRow
from pyqudec.engine.AggregateRow import AggregateRow

logger = logging.getLogger(__name__)


class ResultWriter:
    """UTF-8 comma-separated tables with a header row, floats at 9 significant digits, empty for missing."""

    FLOAT_FORMAT: str = '.9g'
    FAILED_MARKER: str = 'FAILED'

    __out_dir: Path

    def __init__(self, out_dir: Path | str) -> None:
        self.__out_dir = Path(out_dir)
        self.__out_dir.mkdir(parents=True, exist_ok=True)

    @property
    def out_dir(self) -> Path:
        return self.__out_dir

    @classmethod
    def format_value(cls, value: Any) -> str:
        match value:
            case None:
                return ''
            case bool() | bool_():
                return 'true' if value else 'false'
            case int() | integer():
                return str(int(value))
            case float() | floating():
                return format(float(value), cls.FLOAT_FORMAT)
            case _:
                return str(value)

    def write_table(self, name: str, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> Path:
        path: Path = self.__out_dir / f'{name}.csv'
        with path.open('w', newline='', encoding='utf-8') as handle:
            writer = csv.writer(handle, lineterminator='\n')
            writer.writerow(header)
            writer.writerows([self.format_value(value) for value in row] for row in rows)
        logger.info('Wrote %d rows to %s', len(rows), path)
        return path

    def write_metadata(self, metadata: dict) -> Path:
        path: Path = self.__out_dir / 'metadata.json'
        path.write_text(json.dumps(metadata, indent=2, sort_keys=True, default=str) + '\n', encoding='utf-8')
        return path

    def write_record(self, record: RunRecord) -> List[Path]:
        paths: List[Path] = []
        if record.rows or record.aggregates:
            paths.append(self.write_table(
                name='results', header=ResultRow.header(), rows=[row.values() for row in record.rows]
            ))
            paths.append(self.write_table(
                name='aggregates', header=AggregateRow.header(), rows=[row.values() for row in record.aggregates]
            ))
        for name, (header, rows) in record.tables.items():
            paths.append(self.write_table(name=name, header=header, rows=rows))
        paths.append(self.write_metadata(metadata=record.metadata))
        return paths

    def mark_failed(self, error: BaseException) -> Path:
        path: Path = self.__out_dir / self.FAILED_MARKER
        path.write_text(f'{type(error).__name__}: {error}\n', encoding='utf-8')
        logger.error('Run failed, partial results kept in %s', self.__out_dir)
        return path

    def clear_failure(self) -> None:
        (self.__out_dir / self.FAILED_MARKER).unlink(missing_ok=True)
