import csv
import json

import pytest
from numpy import bool_, float64, int64

from pyqudec.errors import EmptyInput, MissingColumns
from pyqudec.engine import AggregateRow, FigureTables, ResultRow, ResultWriter, RunRecord


def row(block_id, strategy='zero', mode='tuned', bit_errors=0, energy=1.0):
    qaoa = mode != 'classical'
    return ResultRow(
        block_id=block_id, snr_db=2.0, init_strategy=strategy, mode=mode, p=1 if qaoa else None,
        iterations_used=4 if qaoa else None, energy=energy if qaoa else None, normalized_energy=0.5 if qaoa else None,
        expected_energy=energy + 1 if qaoa else None, normalized_expected_energy=0.6 if qaoa else None,
        bit_errors=bit_errors, codeword_bit_errors=2 * bit_errors, converged=True if qaoa else None, wall_time_us=12.5
    )


@pytest.mark.parametrize(('value', 'text'), [
    (None, ''),
    (True, 'true'),
    (bool_(False), 'false'),
    (int64(5), '5'),
    (7, '7'),
    (float64(0.1), '0.1'),
    (1 / 3, '0.333333333'),
    (1e-12, '1e-12'),
    ('SCL-4', 'SCL-4'),
])
def test_value_formatting(value, text):
    assert ResultWriter.format_value(value=value) == text


def test_aggregates_group_in_order_of_appearance():
    rows = [row(1, bit_errors=1, energy=2.0), row(1, 'ML', 'classical', 0), row(2, bit_errors=0, energy=4.0),
            row(2, 'ML', 'classical', 2)]
    zero, ml = RunRecord.aggregate(rows=rows, data_bits=2)

    assert (zero.init_strategy, zero.problems, zero.mean_energy, zero.energy_variance) == ('zero', 2, 3.0, 1.0)
    assert zero.mean_bit_errors == 0.5
    assert zero.ber == 0.25
    assert zero.mean_expected_energy == 4.0
    assert (ml.mode, ml.mean_energy, ml.mean_normalized_energy) == ('classical', None, None)
    assert ml.mean_codeword_bit_errors == 2.0
    with pytest.raises(EmptyInput):
        AggregateRow.of(rows=[], data_bits=2)


def test_record_files(tmp_path):
    rows = [row(1), row(1, 'temporal'), row(1, 'ML', 'classical', 1)]
    record = RunRecord(
        rows=rows,
        aggregates=RunRecord.aggregate(rows=rows, data_bits=2),
        metadata={'operation': 'run_experiment'},
        tables={'trace': (['init_strategy', 'evaluation', 'best_expected_energy'], [['zero', 1, 0.25]])}
    )
    writer = ResultWriter(out_dir=tmp_path / 'out')
    names = sorted(path.name for path in writer.write_record(record=record))
    assert names == ['aggregates.csv', 'metadata.json', 'results.csv', 'trace.csv']

    with (tmp_path / 'out' / 'results.csv').open(newline='') as handle:
        results = list(csv.DictReader(handle))
    assert list(results[0]) == ResultRow.header()
    assert results[2]['energy'] == ''
    assert results[2]['converged'] == ''
    assert results[0]['converged'] == 'true'
    assert json.loads((tmp_path / 'out' / 'metadata.json').read_text()) == {'operation': 'run_experiment'}


def test_failure_marker(tmp_path):
    writer = ResultWriter(out_dir=tmp_path)
    marker = writer.mark_failed(error=ValueError('boom'))
    assert marker.read_text() == 'ValueError: boom\n'
    writer.clear_failure()
    assert not marker.exists()
    writer.clear_failure()


def test_figure_tables_from_a_decoding_record():
    rows = [row(1, 'temporal'), row(1, 'zero'), row(1, 'ML', 'classical', 1)]
    record = RunRecord(rows=rows, aggregates=RunRecord.aggregate(rows=rows, data_bits=2))
    assert FigureTables.available(record=record) == ['f6', 'f7', 'f8']

    header, data = FigureTables.table(record=record, figure='f7')
    assert header == ['snr_db', 'init_strategy', 'mode', 'mean_bit_errors', 'ber']
    assert [line[1] for line in data] == ['temporal', 'zero', 'ML']

    header, data = FigureTables.table(record=record, figure='f6')
    assert header[3] == 'mean_normalized_expected_energy'
    assert [line[1] for line in data] == ['temporal', 'zero']
    assert [line[3] for line in data] == pytest.approx([0.6, 0.6])

    _, data = FigureTables.table(record=record, figure='F8')
    assert data == [[2.0, 'tuned', 0.0, 0.0]]


def test_figure_tables_need_their_source():
    with pytest.raises(MissingColumns):
        FigureTables.table(record=RunRecord(), figure='f9')
    with pytest.raises(MissingColumns):
        FigureTables.table(record=RunRecord(), figure='f7')
    with pytest.raises(MissingColumns):
        FigureTables.table(record=RunRecord(), figure='f42')

    record = RunRecord(tables={'gate_durations': (['subblock'], [[128]])})
    assert FigureTables.tables(record=record) == {'f9': (['subblock'], [[128]])}
