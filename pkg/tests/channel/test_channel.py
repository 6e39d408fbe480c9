from math import inf

import pytest
from hypothesis import given, strategies as st
from numpy.random import default_rng
from numpy import allclose, array, array_equal, uint8, var

from pyqudec.errors import EmptyInput, InvalidParameter, LengthMismatch
from pyqudec.channel import AwgnChannel, BlockCsv, FrameGrouper, ReceivedBlock


def block(block_id: int, snr_db: float, truth=None) -> ReceivedBlock:
    return ReceivedBlock(block_id=block_id, symbols=array([1.0, -1.0]), llrs=array([2.0, -2.0]), snr_db=snr_db, truth=truth)


def test_bpsk_maps_zero_to_plus_one():
    assert AwgnChannel.bpsk_modulate(codeword=array([0, 1, 1, 0], dtype=uint8)).tolist() == [1.0, -1.0, -1.0, 1.0]


def test_noise_variance_follows_es_over_n0():
    assert AwgnChannel.noise_variance(snr_db=0.0) == 1.0
    assert AwgnChannel.noise_variance(snr_db=10.0) == pytest.approx(0.1)
    assert AwgnChannel.noise_variance(snr_db=inf) == 0.0


def test_awgn_is_seeded_and_has_the_configured_variance():
    symbols = AwgnChannel.bpsk_modulate(codeword=array([0] * 20000, dtype=uint8))
    first = AwgnChannel.awgn_apply(symbols=symbols, snr_db=3.0, seed=11)
    second = AwgnChannel.awgn_apply(symbols=symbols, snr_db=3.0, seed=11)
    assert array_equal(first, second)
    assert var(first - symbols) == pytest.approx(AwgnChannel.noise_variance(snr_db=3.0), rel=0.05)


def test_noiseless_channel_uses_the_variance_floor():
    channel = AwgnChannel(noiseless_variance_floor=1e-2)
    received = AwgnChannel.awgn_apply(symbols=array([1.0, -1.0]), snr_db=inf, seed=0)
    assert received.tolist() == [1.0, -1.0]
    assert channel.llr_compute(received=received, snr_db=inf).tolist() == [200.0, -200.0]


@given(seed=st.integers(0, 2 ** 32 - 1), snr_db=st.floats(-5.0, 10.0))
def test_hard_decision_of_llrs_matches_the_sign_of_the_received_symbols(seed, snr_db):
    received = default_rng(seed).standard_normal(8)
    llrs = AwgnChannel().llr_compute(received=received, snr_db=snr_db)
    assert allclose(llrs, 2.0 * received / AwgnChannel.noise_variance(snr_db=snr_db))
    assert AwgnChannel.hard_decision(llrs=llrs).tolist() == [int(value < 0) for value in received]


def test_received_block_validation():
    with pytest.raises(LengthMismatch):
        ReceivedBlock(block_id=0, symbols=array([1.0]), llrs=array([1.0, 2.0]), snr_db=0.0)
    with pytest.raises(InvalidParameter):
        ReceivedBlock(block_id=0, symbols=array([1.0]), llrs=array([inf]), snr_db=0.0)
    assert block(block_id=0, snr_db=0.0, truth=[1]).is_preamble
    assert not block(block_id=1, snr_db=0.0).is_preamble


def test_grouper_quantizes_half_up():
    grouper = FrameGrouper(step_db=1.0)
    assert grouper.quantize(snr_db=1.5) == 2.0
    assert grouper.quantize(snr_db=2.49) == 2.0
    assert grouper.quantize(snr_db=-0.5) == 0.0
    with pytest.raises(InvalidParameter):
        FrameGrouper(step_db=0.0)


def test_grouper_partitions_blocks_into_sorted_frames():
    frames = FrameGrouper(step_db=1.0).group_by_snr(blocks=[
        block(block_id=0, snr_db=3.6),
        block(block_id=1, snr_db=1.6, truth=[0]),
        block(block_id=2, snr_db=2.4),
    ])
    assert [frame.snr_db for frame in frames] == [2.0, 4.0]
    assert [len(frame) for frame in frames] == [2, 1]
    assert [item.block_id for item in frames[0].preamble] == [1]
    assert [item.block_id for item in frames[0].payload] == [2]
    assert not frames[1].preamble
    with pytest.raises(EmptyInput):
        FrameGrouper().group_by_snr(blocks=[])


def test_grouper_puts_2_6_db_in_the_3_db_bin():
    frames = FrameGrouper(step_db=1.0).group_by_snr(blocks=[
        block(block_id=0, snr_db=2.4), block(block_id=1, snr_db=2.6), block(block_id=2, snr_db=3.6)
    ])
    assert [(frame.snr_db, len(frame)) for frame in frames] == [(2.0, 1), (3.0, 1), (4.0, 1)]


def test_block_csv_reads_back_exact_values(tmp_path):
    rng = default_rng(5)
    blocks = [
        ReceivedBlock(block_id=0, symbols=rng.standard_normal(4), llrs=rng.standard_normal(4), snr_db=1.5,
                      truth=array([1, 0], dtype=uint8)),
        ReceivedBlock(block_id=7, symbols=rng.standard_normal(4), llrs=rng.standard_normal(4), snr_db=1.5),
    ]
    path = tmp_path / 'blocks.csv'
    BlockCsv.write(path=path, blocks=blocks)
    restored = BlockCsv.read(path=path)

    assert [item.block_id for item in restored] == [0, 7]
    for original, copy in zip(blocks, restored):
        assert array_equal(original.symbols, copy.symbols)
        assert array_equal(original.llrs, copy.llrs)
    assert restored[0].truth.tolist() == [1, 0]
    assert restored[1].truth is None
