import pytest
from hypothesis import given, settings, strategies as st
from numpy.random import default_rng
from numpy import allclose, arctanh, array, tanh, uint8, zeros

from pyqudec.channel import AwgnChannel
from pyqudec.codes import BenchmarkCodes, PolarCode, PolarCodeConfig
from pyqudec.errors import InvalidParameter, LengthMismatch, SizeLimit
from pyqudec.classical import BeliefPropagationDecoder, BpConfig, MlDecoder, SclConfig, SclDecoder

POLAR_CODES = [PolarCode(config=PolarCodeConfig.build(n=n, k=k)) for n, k in ((4, 2), (8, 3), (8, 4), (16, 4))]


@settings(deadline=None, max_examples=40)
@given(code=st.sampled_from(POLAR_CODES), seed=st.integers(0, 2 ** 32 - 1))
def test_full_list_decoding_is_maximum_likelihood(code, seed):
    llrs = default_rng(seed).standard_normal(code.n) * 2
    decoder = SclDecoder(config=code.config, scl=SclConfig.maximum_likelihood(k=code.k))
    assert decoder.list_size == 2 ** code.k
    assert decoder.decode(llrs=llrs).tolist() == MlDecoder(code=code).decode(llrs=llrs).tolist()


@given(code=st.sampled_from(POLAR_CODES), seed=st.integers(0, 2 ** 32 - 1), list_size=st.integers(1, 8))
def test_list_decoding_recovers_noiseless_words(code, seed, list_size):
    data = default_rng(seed).integers(0, 2, size=code.k).astype(uint8)
    llrs = AwgnChannel().llr_compute(received=AwgnChannel.bpsk_modulate(codeword=code.encode(data=data)), snr_db=float('inf'))
    decoder = SclDecoder(config=code.config, scl=SclConfig(list_size=list_size))
    assert decoder.decode(llrs=llrs).tolist() == data.tolist()
    assert decoder.decode_inputs(llrs=llrs).tolist() == code.input_vector(data=data).tolist()


def test_boxplus_matches_the_tanh_rule():
    a = array([0.3, -1.2, 4.0, -0.1, 2.5])
    b = array([1.1, 0.7, -3.0, -2.2, 2.5])
    assert allclose(SclDecoder.boxplus(a, b), 2 * arctanh(tanh(a / 2) * tanh(b / 2)))


@given(seed=st.integers(0, 2 ** 32 - 1))
def test_bp_on_a_cycle_free_graph_is_maximum_likelihood(repetition_3, seed):
    llrs = default_rng(seed).standard_normal(3) * 2
    decoded = BeliefPropagationDecoder(parity_check=repetition_3.parity_check).decode(llrs=llrs)
    assert decoded.tolist() == MlDecoder(code=repetition_3).decode_codeword(llrs=llrs).tolist()


@given(bits=st.lists(st.integers(0, 1), min_size=2, max_size=2))
def test_bp_keeps_a_noiseless_codeword(bits):
    code = BenchmarkCodes.ldpc_13()
    codeword = code.encode(data=array(bits, dtype=uint8))
    llrs = AwgnChannel().llr_compute(received=AwgnChannel.bpsk_modulate(codeword=codeword), snr_db=float('inf'))
    decoded = BeliefPropagationDecoder(parity_check=code.parity_check, config=BpConfig(max_iterations=5)).decode(llrs=llrs)
    assert decoded.tolist() == codeword.tolist()


def test_bp_corrects_a_single_weak_error(ldpc_13):
    llrs = array([4.0, 4.0, 4.0, 4.0, 4.0, 4.0, -1.0])
    assert BeliefPropagationDecoder(parity_check=ldpc_13.parity_check).decode(llrs=llrs).tolist() == [0] * 7


def test_ml_breaks_ties_towards_the_smallest_word(polar_12, ldpc_13):
    decoder = MlDecoder(code=polar_12)
    assert decoder.decode(llrs=zeros(4)).tolist() == [0, 0]
    assert decoder.evaluations == 4
    assert MlDecoder(code=ldpc_13).decode_codeword(llrs=array([-1.0] * 7)).tolist() == [1, 1, 1, 1, 1, 1, 1]


def test_ml_limits(polar_12):
    with pytest.raises(SizeLimit):
        MlDecoder(code=polar_12, max_data_bits=1).decode(llrs=zeros(4))
    with pytest.raises(LengthMismatch):
        MlDecoder(code=polar_12).decode(llrs=zeros(3))


def test_decoder_configs_validate():
    with pytest.raises(InvalidParameter):
        SclConfig(list_size=0)
    with pytest.raises(InvalidParameter):
        BpConfig(max_iterations=0)
    with pytest.raises(LengthMismatch):
        SclDecoder(config=PolarCodeConfig.build(n=4, k=2)).decode(llrs=zeros(8))
