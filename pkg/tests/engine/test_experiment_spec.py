import json
from math import inf

import pytest
from hypothesis import given, strategies as st

from pyqudec.errors import ConfigError
from pyqudec.engine import ExperimentSpec, SeedMixer, SeedStream


def test_splitmix64_reference_value():
    assert SeedMixer.splitmix64(value=0) == 0xE220A8397B1DCDAF


@given(master=st.integers(0, 2 ** 64 - 1), snr_index=st.integers(0, 50), problem_index=st.integers(0, 10 ** 6))
def test_seed_streams_are_stable_and_distinct(master, snr_index, problem_index):
    seeds = SeedMixer(master_seed=master)
    values = [seeds.seed(snr_index=snr_index, problem_index=problem_index, stream=stream) for stream in SeedStream]
    assert values == [
        SeedMixer(master_seed=master).seed(snr_index=snr_index, problem_index=problem_index, stream=stream)
        for stream in SeedStream
    ]
    assert len(set(values)) == len(values)
    assert all(0 <= value < 2 ** 64 for value in values)


def test_seeds_depend_on_every_index():
    seeds = SeedMixer(master_seed=5)
    base = seeds.seed(snr_index=1, problem_index=2, stream=SeedStream.PAYLOAD_NOISE)
    assert base != seeds.seed(snr_index=2, problem_index=1, stream=SeedStream.PAYLOAD_NOISE)
    assert base != SeedMixer(master_seed=6).seed(snr_index=1, problem_index=2, stream=SeedStream.PAYLOAD_NOISE)
    assert SeedMixer(master_seed=-1).master_seed == 2 ** 64 - 1


def test_defaults():
    spec = ExperimentSpec()
    assert spec.family == 'polar'
    assert spec.init_strategies == ('temporal', 'random', 'zero')
    assert spec.noise_problems_per_snr == 100
    assert spec.error_rates[-1] == 0.0
    assert spec.normalization_cap <= spec.brute_force_max_vars
    assert spec.warm_start_scales == (0.25, 0.5, 1.0, 2.0, 4.0)
    assert spec.to_mapping()['code'] == {'family': 'polar', 'n': 4, 'k': 2}


@pytest.mark.parametrize('overrides', [
    {'snr_list_db': ()},
    {'problems_per_snr': 0},
    {'init_strategies': ('temporal', 'annealed')},
    {'modes': ()},
    {'modes': ('fast',)},
    {'baselines': ('viterbi',)},
    {'init_strategies': (), 'baselines': ()},
    {'backend': 'hardware'},
    {'extraction': 'greedy'},
    {'penalty_weight': 'huge'},
    {'penalty_weight': -1.0},
    {'noise_p1': 1.5},
    {'error_rates': (0.1, 2.0)},
    {'scl_list_size': 0},
    {'snr_step_db': 0.0},
    {'normalization_cap': 20, 'brute_force_max_vars': 18},
    {'warm_start_scales': ()},
    {'warm_start_scales': (1.0, -2.0)},
])
def test_invalid_specs(overrides):
    with pytest.raises(ConfigError):
        ExperimentSpec(**overrides)


def test_infinite_snr_is_allowed():
    assert ExperimentSpec(snr_list_db=[inf]).snr_list_db == (inf,)


def test_from_json_resolves_the_h_file(tmp_path):
    path = tmp_path / 'run.json'
    path.write_text(json.dumps({'code': {'family': 'ldpc', 'h_file': 'h.txt'}, 'baselines': ['bp']}))
    spec = ExperimentSpec.from_json(path=path)
    assert spec.code['h_file'] == str(tmp_path / 'h.txt')
    assert spec.baselines == ('bp',)


def test_from_json_errors(tmp_path):
    path = tmp_path / 'run.json'
    path.write_text(json.dumps({'problems': 3}))
    with pytest.raises(ConfigError):
        ExperimentSpec.from_json(path=path)

    path.write_text('{not json')
    with pytest.raises(ConfigError):
        ExperimentSpec.from_json(path=path)

    path.write_text('3')
    with pytest.raises(ConfigError):
        ExperimentSpec.from_json(path=path)

    with pytest.raises(ConfigError):
        ExperimentSpec.from_json(path=tmp_path / 'absent.json')
