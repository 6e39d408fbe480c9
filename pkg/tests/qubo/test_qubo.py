from itertools import product

import pytest
from hypothesis import given, settings, strategies as st
from numpy.random import default_rng
from numpy import allclose, array, array_equal, diag, uint8, zeros

from pyqudec.codes import BenchmarkCodes, PolarCode, PolarCodeConfig
from pyqudec.errors import LengthMismatch, SizeLimit, WeightTooSmall, InvalidParameter
from pyqudec.qubo import BruteForceSolver, CoefficientSpread, LdpcQuboBuilder, PolarQuboBuilder, Qubo, QuboBuilder, VariableRole

CODES = {
    'polar_12': BenchmarkCodes.polar_12(),
    'polar_4': BenchmarkCodes.polar_4(),
    'ldpc_13': BenchmarkCodes.ldpc_13(),
}


def codebook_minimum(code, llrs):
    """Data word minimizing sum L_i c_i over the whole codebook, with its metric."""
    best = None
    for bits in product((0, 1), repeat=code.k):
        data = array(bits, dtype=uint8)
        metric = float(llrs @ code.encode(data=data))
        if best is None or metric < best[1]:
            best = (data, metric)
    return best


@pytest.mark.parametrize(('name', 'eliminate', 'n_vars', 'logical'), [
    ('polar_12', True, 10, 12),
    ('polar_12', False, 12, 12),
    ('polar_4', True, 3, 4),
    ('polar_4', False, 4, 4),
    ('ldpc_13', True, 13, 13),
])
def test_variable_counts(name, eliminate, n_vars, logical):
    builder = QuboBuilder.for_code(code=CODES[name], eliminate_frozen=eliminate)
    assert (builder.n_vars, builder.logical_vars) == (n_vars, logical)
    assert builder.build(llrs=zeros(CODES[name].n)).logical_vars == logical


@pytest.mark.parametrize('n', [8, 16, 32])
def test_polar_logical_variables_grow_as_n_log_n(n):
    builder = PolarQuboBuilder(code=PolarCode(config=PolarCodeConfig.build(n=n, k=n // 2)), eliminate_frozen=False)
    assert builder.logical_vars == n + n * (n.bit_length() - 1)


def test_builders_match_the_code_family():
    assert isinstance(QuboBuilder.for_code(code=CODES['ldpc_13']), LdpcQuboBuilder)
    assert isinstance(QuboBuilder.for_code(code=CODES['polar_12']), PolarQuboBuilder)


def test_polar_roles_mark_codeword_outputs():
    roles = QuboBuilder.for_code(code=CODES['polar_4'], eliminate_frozen=False).build(llrs=zeros(2)).roles
    assert roles == (VariableRole.INPUT_BIT, VariableRole.INPUT_BIT, VariableRole.CODEWORD_BIT, VariableRole.ANCILLA)


@settings(deadline=None, max_examples=30)
@given(name=st.sampled_from(sorted(CODES)), seed=st.integers(0, 2 ** 32 - 1))
def test_qubo_minimum_is_the_maximum_likelihood_codeword(name, seed):
    code = CODES[name]
    llrs = default_rng(seed).standard_normal(code.n) * 2
    qubo = QuboBuilder.for_code(code=code).build(llrs=llrs)
    solution, cost = BruteForceSolver().minimize(qubo=qubo)

    data, metric = codebook_minimum(code=code, llrs=llrs)
    assert cost == pytest.approx(metric)
    assert array_equal(qubo.data_bits(solution=solution), data)
    assert array_equal(qubo.codeword_bits(solution=solution), code.encode(data=data))


@settings(deadline=None, max_examples=20)
@given(name=st.sampled_from(sorted(CODES)), seed=st.integers(0, 2 ** 32 - 1))
def test_ising_energies_equal_qubo_costs(name, seed):
    qubo = QuboBuilder.for_code(code=CODES[name]).build(llrs=default_rng(seed).standard_normal(CODES[name].n) * 2)
    ising = qubo.to_ising()
    assert allclose(ising.energy_vector(), qubo.cost_vector())

    z = 1.0 - 2.0 * default_rng(seed).integers(0, 2, size=qubo.n_vars)
    assert ising.energy(z=z) == pytest.approx(qubo.cost(x=(1 - z) / 2))


def test_cost_vector_indexes_variable_i_as_bit_i():
    qubo = Qubo(q=array([[1.0, 0.5], [0.5, -3.0]]), offset=2.0)
    assert qubo.cost_vector().tolist() == [2.0, 3.0, -1.0, 1.0]
    assert qubo.coefficient_magnitude == 4.5


def test_qubo_validation():
    with pytest.raises(InvalidParameter):
        Qubo(q=array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(LengthMismatch):
        Qubo(q=zeros((2, 2))).cost(x=[1])


def test_penalty_weight_must_exceed_the_llr_bound():
    builder = QuboBuilder.for_code(code=CODES['polar_4'])
    llrs = array([1.5, -2.0])
    assert QuboBuilder.default_penalty_weight(llrs=llrs) == 4.5
    with pytest.raises(WeightTooSmall):
        builder.build(llrs=llrs, penalty_weight=3.5)
    with pytest.raises(LengthMismatch):
        builder.build(llrs=array([1.0, 2.0, 3.0]))


def test_brute_force_breaks_ties_towards_the_smallest_bitstring():
    solution, cost = BruteForceSolver().minimize(qubo=Qubo(q=zeros((3, 3)), offset=1.25))
    assert solution.tolist() == [0, 0, 0]
    assert cost == 1.25

    solution, cost = BruteForceSolver().maximize(qubo=Qubo(q=diag([1.0, 2.0])))
    assert solution.tolist() == [1, 1]
    assert cost == 3.0


def test_brute_force_orders_variable_zero_as_most_significant():
    solution, _ = BruteForceSolver().minimize(qubo=Qubo(q=diag([-1.0, -1.0, 5.0])))
    assert solution.tolist() == [1, 1, 0]


def test_brute_force_cap():
    with pytest.raises(SizeLimit):
        BruteForceSolver(max_vars=2).minimize(qubo=Qubo(q=zeros((3, 3))))


def test_frame_weight_leaves_only_codeword_diagonals_varying():
    builder = QuboBuilder.for_code(code=CODES['polar_4'], eliminate_frozen=False)
    frame = [array([1.2, -0.4]), array([-2.0, 0.7]), array([0.3, 0.1])]
    weight = max(QuboBuilder.default_penalty_weight(llrs=llrs) for llrs in frame)
    spread = CoefficientSpread.of(qubos=[builder.build(llrs=llrs, penalty_weight=weight) for llrs in frame])

    assert len(spread) == 10
    varying = {(entry.i, entry.j) for entry in spread if not entry.constant}
    assert varying == {(1, 1), (2, 2)}
    assert all(entry.relative_spread == 0.0 for entry in spread if entry.constant)


def test_sparse_text_keeps_exact_coefficients(tmp_path):
    qubo = QuboBuilder.for_code(code=CODES['polar_12']).build(llrs=default_rng(1).standard_normal(4))
    path = tmp_path / 'qubo.txt'
    qubo.write_sparse(path=path)
    restored = Qubo.read_sparse(path=path)
    assert array_equal(restored.q, qubo.q)
    assert restored.offset == qubo.offset


@pytest.mark.parametrize('name', sorted(CODES))
def test_distance_term_is_the_llr_on_each_codeword_diagonal(name):
    code = CODES[name]
    builder = QuboBuilder.for_code(code=code)
    llrs = default_rng(4).standard_normal(code.n) * 3
    weight = float(abs(llrs).sum()) + 1.0
    shift = builder.build(llrs=llrs, penalty_weight=weight).q - builder.build(llrs=zeros(code.n), penalty_weight=weight).q

    expected = zeros(shift.shape)
    for bit, variable in enumerate(builder.build(llrs=llrs, penalty_weight=weight).codeword_map):
        if variable >= 0:
            expected[variable, variable] += llrs[bit]
    assert allclose(shift, expected)
