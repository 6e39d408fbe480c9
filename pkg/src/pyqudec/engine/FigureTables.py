from typing import Any, Callable, Dict, List, Tuple

from pyqudec.errors import MissingColumns
from pyqudec.engine.RunRecord import RunRecord, Table
from pyqudec.engine.AggregateRow import AggregateRow


class FigureTables:
    """
    Plot-ready tables cut from a RunRecord.

      f5     snr_db, i, j, minimum, maximum, relative_spread, constant      (coefficient spread)
      f6     snr_db, init_strategy, mode, mean_normalized_expected_energy, mean_normalized_energy,
             mean_energy, energy_variance
      f7     snr_db, init_strategy, mode, mean_bit_errors, ber           (QAOA and baselines)
      f8     snr_db, mode, mean_bit_errors, ber                          (temporal, per mode)
      f9     subblock, n_v, budget_us, required_gd_ns                    (gate durations)
      f11    noise_sweep columns                                         (energy vs error rate)
      trace  init_strategy, evaluation, best_expected_energy
    """

    FIGURES: Tuple[str, ...] = ('f5', 'f6', 'f7', 'f8', 'f9', 'f11', 'trace')
    __PASSTHROUGH: Dict[str, str] = {
        'f5': 'coefficient_spread',
        'f9': 'gate_durations',
        'f11': 'noise_sweep',
        'trace': 'trace'
    }

    @classmethod
    def __passthrough(cls, record: RunRecord, figure: str) -> Table:
        name: str = cls.__PASSTHROUGH[figure]
        if name not in record.tables:
            raise MissingColumns(f'{figure} needs the {name} table, the record has {sorted(record.tables)}')
        header, rows = record.tables[name]
        return list(header), [list(row) for row in rows]

    @staticmethod
    def __pivot(
            record: RunRecord,
            figure: str,
            keep: Callable[[AggregateRow], bool],
            columns: List[str]
    ) -> Table:
        aggregates: List[AggregateRow] = [row for row in record.aggregates if keep(row)]
        if not aggregates:
            raise MissingColumns(f'{figure} needs aggregates the record does not carry')
        return columns, [[getattr(row, column) for column in columns] for row in aggregates]

    @classmethod
    def table(cls, record: RunRecord, figure: str) -> Table:
        match figure.lower():
            case 'f5' | 'f9' | 'f11' | 'trace':
                return cls.__passthrough(record=record, figure=figure.lower())
            case 'f6':
                return cls.__pivot(
                    record=record,
                    figure='f6',
                    keep=lambda row: row.mean_energy is not None,
                    columns=['snr_db', 'init_strategy', 'mode', 'mean_normalized_expected_energy',
                             'mean_normalized_energy', 'mean_energy', 'energy_variance']
                )
            case 'f7':
                return cls.__pivot(
                    record=record,
                    figure='f7',
                    keep=lambda row: True,
                    columns=['snr_db', 'init_strategy', 'mode', 'mean_bit_errors', 'ber']
                )
            case 'f8':
                return cls.__pivot(
                    record=record,
                    figure='f8',
                    keep=lambda row: row.init_strategy == 'temporal',
                    columns=['snr_db', 'mode', 'mean_bit_errors', 'ber']
                )
            case _:
                raise MissingColumns(f'Figure {figure!r} not in {cls.FIGURES}')

    @classmethod
    def available(cls, record: RunRecord) -> List[str]:
        figures: List[str] = []
        for figure in cls.FIGURES:
            try:
                cls.table(record=record, figure=figure)
            except MissingColumns:
                continue
            figures.append(figure)
        return figures

    @classmethod
    def tables(cls, record: RunRecord) -> Dict[str, Table]:
        return {figure: cls.table(record=record, figure=figure) for figure in cls.available(record=record)}

