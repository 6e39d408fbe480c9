import json
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from pyqudec.codes import BenchmarkCodes
from pyqudec.errors import ConfigError, InvalidParameter, UnsupportedFamily
from pyqudec.resources import PpsScenario, ResourceEstimator, ResourceParams, ResourceStudy, Topology

CONFIGS = Path(__file__).resolve().parents[2] / 'configs'


def test_polar_subblock_sizes():
    estimator = ResourceEstimator()
    assert estimator.qubo_vars_for_subblock(code_family='polar', subblock_bits=128) == 1024
    assert estimator.qubo_vars_for_subblock(code_family='polar', subblock_bits=4) == 12
    with pytest.raises(InvalidParameter):
        estimator.qubo_vars_for_subblock(code_family='polar', subblock_bits=12)
    with pytest.raises(UnsupportedFamily):
        estimator.qubo_vars_for_subblock(code_family='turbo', subblock_bits=8)


def test_ldpc_subblock_sizes_follow_the_kept_checks():
    estimator = ResourceEstimator(parity_check=BenchmarkCodes.ldpc_13().parity_check)
    assert estimator.qubo_vars_for_subblock(code_family='ldpc', subblock_bits=7) == 13
    assert estimator.qubo_vars_for_subblock(code_family='ldpc', subblock_bits=3) == 5
    with pytest.raises(InvalidParameter):
        ResourceEstimator().qubo_vars_for_subblock(code_family='ldpc', subblock_bits=7)


def test_runtime_and_required_gate_duration_are_inverse():
    estimator = ResourceEstimator()
    params = ResourceParams(block_length=128, gate_duration=2e-9, n_ly=3)
    assert estimator.runtime(params=params) == pytest.approx(3 * 1024 * 2e-9)
    budgeted = params.with_budget(t_run_budget=estimator.runtime(params=params))
    assert estimator.required_gate_duration(params=budgeted) == pytest.approx(2e-9)
    with pytest.raises(InvalidParameter):
        estimator.required_gate_duration(params=params)


def test_gate_durations_for_a_full_polar_block():
    rows = ResourceEstimator().gate_duration_table(
        params=ResourceParams(block_length=128), subblocks=(128,), budgets_us=(50, 40, 30, 20, 10, 1)
    )
    assert [row.n_v for row in rows] == [1024] * 6
    assert [round(row.required_gd_ns, 2) for row in rows] == [48.83, 39.06, 29.30, 19.53, 9.77, 0.98]


def test_smaller_subblocks_multiply_the_problem_count():
    rows = ResourceEstimator().gate_duration_table(
        params=ResourceParams(block_length=128), subblocks=(64,), budgets_us=(50,)
    )
    assert rows[0].n_v == 448
    assert rows[0].required_gd_ns == pytest.approx(50e3 / (2 * 448))


@given(pps=st.floats(0, 1e8), qubits_per_problem=st.floats(0, 100), t_run=st.floats(1e-7, 1e-3))
def test_qubit_counts_round_the_demand_up(pps, qubits_per_problem, t_run):
    [row] = ResourceEstimator().qubit_table(
        scenarios=[PpsScenario(bandwidth_mhz=20, antennas=4, pps=pps)], qubits_per_problem=qubits_per_problem, t_run=t_run
    )
    demand = ResourceEstimator.qubit_demand(n_pps=pps, qubits_per_problem=qubits_per_problem, t_run=t_run)
    assert demand - 1e-6 <= row.qubits < demand + 1


def test_qubit_count_from_params():
    params = ResourceParams(n_pps=100, qubits_per_problem=12, t_run_budget=1e-3)
    assert ResourceEstimator.qubit_count(params=params) == 2
    assert ResourceEstimator.qubit_count(params=params, t_run=0.0) == 0
    assert ResourceEstimator.qubit_count(params=ResourceParams()) == 0


def test_topology_presets():
    assert Topology.from_name(name='heavy_hex') is Topology.HEAVY_HEX
    assert ResourceEstimator.depth_preset(topology='sycamore', n_v=10) == 25.0
    assert ResourceEstimator.depth_preset(topology=Topology.LINEAR, n_v=10) == 10.0
    with pytest.raises(InvalidParameter):
        Topology.from_name(name='ring')


def test_params_validation():
    with pytest.raises(InvalidParameter):
        ResourceParams(block_length=128, n_sub=3)
    with pytest.raises(InvalidParameter):
        ResourceParams(gate_duration=0.0)
    with pytest.raises(ConfigError):
        ResourceParams.from_mapping(values={'gate_length': 1e-9})
    assert ResourceParams(block_length=128, n_sub=4).subblock_bits == 32


def test_study_topology_scales_the_required_durations():
    linear = ResourceStudy(params=ResourceParams(), topology='linear').tables()['gate_durations'][1]
    heavy = ResourceStudy(params=ResourceParams(), topology='heavy-hex').tables()['gate_durations'][1]
    assert heavy[0][3] == pytest.approx(linear[0][3] / 6.0)


def test_shipped_resource_config():
    study = ResourceStudy.from_json(path=CONFIGS / 'resources.json')
    header, rows = study.tables()['gate_durations']
    assert header == ['subblock', 'n_v', 'budget_us', 'required_gd_ns']
    full_block = [row for row in rows if row[0] == 128]
    assert [round(row[3], 2) for row in full_block] == [48.83, 39.06, 29.30, 19.53, 9.77, 0.98]

    header, rows = study.tables()['qubits']
    assert header == ['bandwidth_mhz', 'antennas', 'pps', 'qubits']
    assert rows[0][3] == 68


def test_study_config_errors(tmp_path):
    path = tmp_path / 'study.json'
    path.write_text(json.dumps({'subblocks': [8], 'budget': 3}))
    with pytest.raises(ConfigError):
        ResourceStudy.from_json(path=path)

    path.write_text(json.dumps({'params': {'n_sub': 0}}))
    with pytest.raises(ConfigError):
        ResourceStudy.from_json(path=path)

    path.write_text('[1, 2]')
    with pytest.raises(ConfigError):
        ResourceStudy.from_json(path=path)
    with pytest.raises(ConfigError):
        ResourceStudy.from_json(path=tmp_path / 'missing.json')


def test_study_sizes_ldpc_from_an_h_file(tmp_path):
    BenchmarkCodes.ldpc_13().parity_check.dump(path=tmp_path / 'h.txt')
    (tmp_path / 'study.json').write_text(json.dumps({
        'params': {'block_length': 7, 'code_family': 'ldpc'},
        'subblocks': [7],
        'budgets_us': [13],
        'h_file': 'h.txt'
    }))
    _, rows = ResourceStudy.from_json(path=tmp_path / 'study.json').tables()['gate_durations']
    assert rows == [[7, 13, 13.0, pytest.approx(1000.0)]]
