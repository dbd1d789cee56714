import itertools
import math

import numpy as np
import pytest
from hypothesis import given

import oracle
from bispinor_qc.gamma import (
    GeneratorNotInvolutoryError,
    alpha,
    basis16,
    charge_matrix,
    clifford_check,
    exp_generator,
    gamma,
    gamma5,
    pauli,
    sigma_big,
    trace_inner,
)
from bispinor_qc.matrix import BackendMismatchError, Mat, identity, max_abs_diff, to_numpy
from bispinor_qc.scalar import ONE, QUARTER_PI, PiFraction
from strategies import angles


@pytest.mark.parametrize("mu", range(4))
def test_gamma_matches_pauli_blocks(mu):
    assert np.array_equal(to_numpy(gamma(mu)), oracle.G[mu])


def test_squares_follow_metric():
    assert gamma(0) @ gamma(0) == identity(4)
    assert gamma(2) @ gamma(2) == -identity(4)


def test_gamma_index_out_of_range():
    with pytest.raises(ValueError):
        gamma(4)
    with pytest.raises(ValueError):
        sigma_big(0)


def test_gamma5_and_derived():
    assert gamma5() == Mat([[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    for i in (1, 2, 3):
        assert np.array_equal(to_numpy(sigma_big(i)), np.kron(np.eye(2), oracle.PAULI[i - 1]))
        assert alpha(i) == gamma(0) @ gamma(i)
    assert charge_matrix() == Mat([[0, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [1, 0, 0, 0]])


def test_clifford_report_shape():
    report = clifford_check()
    assert len(report.checks) == 10 and report.passed
    pairs = {tuple(c.detail["pair"]) for c in report.checks}
    assert pairs == set(itertools.combinations_with_replacement(range(4), 2))


def test_exact_exponential_of_anti_involution():
    R1 = exp_generator(gamma(1), QUARTER_PI)
    assert isinstance(R1, Mat)
    assert max_abs_diff(R1, oracle.expm(math.pi / 4 * oracle.G[1])) <= 1e-13
    assert R1.det() == ONE
    assert exp_generator(gamma(1), 0) == identity(4)


def test_exact_angle_outside_field_falls_back_to_float():
    out = exp_generator(gamma(1), PiFraction("1/3"))
    assert isinstance(out, np.ndarray)
    assert max_abs_diff(out, oracle.expm(math.pi / 3 * oracle.G[1])) <= 1e-12


def test_exponential_of_involution_is_hyperbolic():
    G = gamma(0)  # squares to +1
    out = exp_generator(G, 0.7)
    assert max_abs_diff(out, oracle.expm(0.7 * oracle.G[0])) <= 1e-12


def test_non_involutory_generator_rejected():
    with pytest.raises(GeneratorNotInvolutoryError):
        exp_generator(gamma(0) + gamma(1) + identity(4), 0.3)


@given(angles, angles)
def test_exponential_is_a_one_parameter_group(a, b):
    G = oracle.G[0] @ oracle.G[1] @ oracle.G[3]
    lhs = exp_generator(G, a) @ exp_generator(G, b)
    assert max_abs_diff(lhs, exp_generator(G, a + b)) <= 1e-12


@given(angles)
def test_exponential_matches_series(a):
    for G in (oracle.G[1], oracle.G[0] @ oracle.G[1] @ oracle.G[3], oracle.G[0]):
        ref = oracle.expm(a * G)
        assert max_abs_diff(exp_generator(G, a), ref) <= 1e-11 * max(1.0, np.abs(ref).max())


def test_basis16_is_trace_orthogonal():
    b = basis16()
    assert len(b) == 16 and len({idx.label for idx, _ in b}) == 16
    for (ia, A), (ib, B) in itertools.product(b, b):
        assert trace_inner(A, B) == (4 if ia == ib else 0)


def test_trace_inner_rejects_mixed_backends():
    with pytest.raises(BackendMismatchError):
        trace_inner(gamma(0), oracle.G[0])


def test_pauli_algebra():
    from bispinor_qc.scalar import I

    assert pauli(1) @ pauli(2) == I * pauli(3)
    for i in (1, 2, 3):
        assert pauli(i) @ pauli(i) == identity(2)
