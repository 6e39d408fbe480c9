from math import pi

import pytest
from hypothesis import given, settings, strategies as st
from numpy.random import default_rng
from numpy import allclose, array, eye, kron, outer, zeros

from pyqudec.qubo import Qubo
from pyqudec.errors import ConfigError, DimensionMismatch, InvalidParameter, SizeLimit
from pyqudec.qsim import Circuit, CircuitSimulator, DensityMatrix, Gate, GateKind, NoiseModel, StateSampler, StateVector

SIMULATOR = CircuitSimulator()


def random_circuit(n_qubits: int, seed: int, depth: int = 12) -> Circuit:
    rng = default_rng(seed)
    circuit = Circuit(n_qubits=n_qubits, initial_state='plus' if rng.integers(2) else 'zero')
    for _ in range(depth):
        match int(rng.integers(3)) if n_qubits > 1 else int(rng.integers(2)):
            case 0:
                circuit.rx(qubit=int(rng.integers(n_qubits)), angle=float(rng.uniform(-pi, pi)))
            case 1:
                circuit.rz(qubit=int(rng.integers(n_qubits)), angle=float(rng.uniform(-pi, pi)))
            case _:
                control, target = rng.choice(n_qubits, size=2, replace=False)
                circuit.cnot(control=int(control), target=int(target))
    return circuit


@pytest.mark.parametrize('angle', [0.0, 0.3, pi / 2, pi, -2.1])
def test_rotation_matrices_are_unitary(angle):
    for matrix in (CircuitSimulator.rx_matrix(angle=angle), CircuitSimulator.rz_matrix(angle=angle)):
        assert allclose(matrix @ matrix.conj().T, eye(2))


def test_rx_pi_flips_the_qubit():
    state = SIMULATOR.run_statevector(circuit=Circuit(n_qubits=1).rx(qubit=0, angle=pi))
    assert allclose(state.probabilities(), [0.0, 1.0])
    assert allclose(state.amplitudes, [0.0, -1j])


def test_cnot_flips_the_target_when_the_control_is_set():
    circuit = Circuit(n_qubits=2).cnot(control=0, target=1)
    assert SIMULATOR.run_statevector(circuit=circuit, initial=StateVector.basis(n_qubits=2, index=1)).probabilities()[3] == 1.0
    assert SIMULATOR.run_statevector(circuit=circuit, initial=StateVector.basis(n_qubits=2, index=2)).probabilities()[2] == 1.0


@given(qubit=st.integers(0, 2), angle=st.floats(-pi, pi), seed=st.integers(0, 2 ** 32 - 1))
def test_single_qubit_kernel_matches_the_kronecker_operator(qubit, angle, seed):
    rng = default_rng(seed)
    values = rng.standard_normal(8) + 1j * rng.standard_normal(8)
    matrix = CircuitSimulator.rx_matrix(angle=angle) @ CircuitSimulator.rz_matrix(angle=angle / 3)
    operator = kron(kron(eye(2 ** (2 - qubit)), matrix), eye(2 ** qubit))
    assert allclose(CircuitSimulator.apply_single_qubit(values, matrix, qubit, 3), operator @ values)


@settings(deadline=None, max_examples=25)
@given(n_qubits=st.integers(1, 4), seed=st.integers(0, 2 ** 32 - 1))
def test_noiseless_density_run_matches_the_statevector(n_qubits, seed):
    circuit = random_circuit(n_qubits=n_qubits, seed=seed)
    state = SIMULATOR.run_statevector(circuit=circuit)
    rho = SIMULATOR.run_density(circuit=circuit)
    assert state.norm == pytest.approx(1.0)
    assert allclose(rho.rho, outer(state.amplitudes, state.amplitudes.conj()))


@settings(deadline=None, max_examples=25)
@given(n_qubits=st.integers(1, 4), seed=st.integers(0, 2 ** 32 - 1), p1=st.floats(0, 1), p2=st.floats(0, 1))
def test_noisy_density_matrices_stay_physical(n_qubits, seed, p1, p2):
    rho = SIMULATOR.run_density(circuit=random_circuit(n_qubits=n_qubits, seed=seed), noise=NoiseModel(p1=p1, p2=p2))
    assert rho.trace == pytest.approx(1.0)
    assert rho.is_hermitian()
    assert rho.probabilities().sum() == pytest.approx(1.0)


def test_full_depolarization_gives_the_maximally_mixed_state():
    rho = SIMULATOR.run_density(circuit=Circuit(n_qubits=1).rx(qubit=0, angle=0.7), noise=NoiseModel(p1=1.0))
    assert allclose(rho.rho, eye(2) / 2)

    circuit = Circuit(n_qubits=2).rx(qubit=0, angle=1.1).cnot(control=0, target=1)
    rho = SIMULATOR.run_density(circuit=circuit, noise=NoiseModel(p2=1.0))
    assert allclose(rho.rho, DensityMatrix.maximally_mixed(n_qubits=2).rho)


def test_rz_is_noiseless():
    circuit = Circuit(n_qubits=1, initial_state='plus').rz(qubit=0, angle=0.4)
    noisy = SIMULATOR.run_density(circuit=circuit, noise=NoiseModel(p1=1.0, p2=1.0))
    assert allclose(noisy.rho, SIMULATOR.run_density(circuit=circuit).rho)


def test_size_caps():
    simulator = CircuitSimulator(max_statevector_qubits=2, max_density_qubits=1)
    with pytest.raises(SizeLimit):
        simulator.run_statevector(circuit=Circuit(n_qubits=3))
    with pytest.raises(SizeLimit):
        simulator.run_density(circuit=Circuit(n_qubits=2))
    with pytest.raises(DimensionMismatch):
        SIMULATOR.run_statevector(circuit=Circuit(n_qubits=2), initial=StateVector.zero(n_qubits=3))


def test_gate_and_circuit_validation():
    with pytest.raises(InvalidParameter):
        Gate.cnot(control=1, target=1)
    with pytest.raises(InvalidParameter):
        Circuit(n_qubits=2).rx(qubit=2, angle=0.1)
    with pytest.raises(InvalidParameter):
        Circuit(n_qubits=0)
    with pytest.raises(DimensionMismatch):
        StateVector(amplitudes=zeros(3))


def test_circuit_text_is_exact():
    circuit = random_circuit(n_qubits=3, seed=4)
    restored = Circuit.loads(text=circuit.dumps())
    assert restored.gates == circuit.gates
    assert restored.initial_state == circuit.initial_state
    assert sum(circuit.gate_counts().values()) == len(circuit)
    with pytest.raises(ConfigError):
        Circuit.loads(text='2 zero\nH 0\n')


def test_sampler_reads_variable_i_from_qubit_i():
    state = StateVector.basis(n_qubits=3, index=0b011)
    shots = StateSampler.sample_bitstrings(state=state, n_shots=5, seed=1)
    assert shots.tolist() == [[1, 1, 0]] * 5

    cost = Qubo(q=array([[1.0, 0.0, 0.0], [0.0, 2.0, 0.0], [0.0, 0.0, 4.0]]))
    assert StateSampler.expectation_diag(state=state, cost=cost) == 3.0
    with pytest.raises(InvalidParameter):
        StateSampler.sample_indices(state=state, n_shots=0, seed=1)


def test_sampling_is_seeded():
    state = StateVector.plus(n_qubits=4)
    first = StateSampler.sample_indices(state=state, n_shots=64, seed=9)
    assert (first == StateSampler.sample_indices(state=state, n_shots=64, seed=9)).all()


def test_noise_model_parameterization():
    assert NoiseModel.from_two_qubit_rate(rate=0.5, one_qubit_ratio=3.0) == NoiseModel(p1=1.0, p2=0.5)
    assert NoiseModel().noiseless
    with pytest.raises(InvalidParameter):
        NoiseModel(p1=1.5)
    assert Gate.rx(qubit=0, angle=1).kind is GateKind.RX
