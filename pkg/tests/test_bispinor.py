import math

import numpy as np
import pytest
from hypothesis import given

import oracle
from bispinor_qc import bispinor as bs
from bispinor_qc.matrix import Mat, max_abs_diff, to_numpy
from strategies import phis, thetas


def test_direction_validation():
    with pytest.raises(ValueError):
        bs.Direction(-0.1, 0.0)
    with pytest.raises(ValueError):
        bs.Direction(0.1, 2 * math.pi)
    assert bs.Direction(0.0, 0.0).is_canonical and bs.Direction(math.pi, 1.0).is_pole


def test_flipped_direction_is_antipodal():
    d = bs.Direction(0.4, 5.0)
    assert np.allclose(d.flipped().unit_vector(), -d.unit_vector(), atol=1e-15)


def test_random_directions_are_reproducible():
    a = [bs.Direction.random(np.random.default_rng(3)) for _ in range(2)]
    assert a[0] == a[1]


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_canonical_weyl_vectors(i):
    assert np.array_equal(to_numpy(bs.canonical_weyl(i).components), oracle.U_CANON[i])
    assert bs.weyl(i).backend == "exact"


def test_bad_solution_index():
    with pytest.raises(ValueError):
        bs.canonical_weyl(5)


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_canonical_majorana_vectors(i):
    s = 1 / math.sqrt(2)
    expected = {1: [0, s, -s, 0], 2: [0, s, s, 0], 3: [-s, 0, 0, s], 4: [s, 0, 0, s]}
    m = bs.majorana(i)
    assert isinstance(m.components, Mat)
    assert max_abs_diff(m.components, np.array(expected[i])) <= 1e-15
    assert bs.charge_conjugate(m.components) == bs.MAJORANA_SIGNS[i] * m.components


def test_majorana_signs():
    assert bs.MAJORANA_SIGNS == {1: 1, 2: -1, 3: -1, 4: 1}


@given(thetas, phis)
def test_general_weyl_is_rotated_canonical(theta, phi):
    d = bs.Direction(theta, phi)
    for i in (1, 2, 3, 4):
        assert max_abs_diff(bs.general_weyl(i, d).components, oracle.weyl(i, theta, phi)) <= 1e-12


@given(thetas, phis)
def test_measured_quantum_numbers_are_frame_independent(theta, phi):
    d = bs.Direction(theta, phi)
    for i in (1, 2, 3, 4):
        assert bs.measure_eigenvalues(bs.general_weyl(i, d), d) == bs.WEYL_EIGENVALUES[i]


@given(thetas, phis)
def test_rotation_is_special_unitary(theta, phi):
    lam = bs.rotation_lambda(bs.Direction(theta, phi))
    assert max_abs_diff(lam.conj().T @ lam, np.eye(4)) <= 1e-12
    assert abs(np.linalg.det(lam) - 1) <= 1e-12
    assert max_abs_diff(lam, oracle.rotation(theta, phi)) <= 1e-12


@given(thetas, phis)
def test_majorana_general_matches_reference(theta, phi):
    d = bs.Direction(theta, phi)
    for i in (1, 2, 3, 4):
        assert max_abs_diff(bs.majorana(i, d).components, oracle.majorana(i, theta, phi)) <= 1e-12


@given(thetas, phis)
def test_chirality_equals_helicity_times_energy(theta, phi):
    d = bs.Direction(theta, phi)
    for i in (1, 2, 3, 4):
        e, h, c = bs.measure_eigenvalues(bs.general_weyl(i, d), d)
        assert c == e * h


def test_measure_reports_none_for_non_eigenvectors():
    mix = bs.canonical_weyl(1).components + bs.canonical_weyl(3).components
    assert bs.measure_eigenvalues(mix) == (None, None, +1)


def test_charge_conjugation_is_antilinear():
    v = np.array([1, 2j, 3, -1j])
    assert max_abs_diff(bs.charge_conjugate(1j * v), -1j * bs.charge_conjugate(v)) <= 1e-15


def test_projectors_exact_in_canonical_frame():
    Pp, Pm = bs.energy_projectors()
    Sp, Sm = bs.spin_sum_projectors()
    assert Pp == Sp and Pm == Sm


@given(thetas, phis)
def test_spin_sums_equal_projectors(theta, phi):
    d = bs.Direction(theta, phi)
    (Pp, Pm), (Sp, Sm) = bs.energy_projectors(d), bs.spin_sum_projectors(d)
    assert max_abs_diff(Pp, Sp) <= 1e-12 and max_abs_diff(Pm, Sm) <= 1e-12
    ref = (np.eye(4) + oracle.alpha_dot(theta, phi)) / 2
    assert max_abs_diff(Pp, ref) <= 1e-12


def test_flip_check_refuses_poles():
    with pytest.raises(bs.PoleDirectionError):
        bs.flip_identities_check(bs.Direction(0.0, 1.0))
    with pytest.raises(bs.PoleDirectionError):
        bs.flip_identities_check(bs.Direction(math.pi, 0.0))


@given(thetas, phis)
def test_flip_identities_hold(theta, phi):
    assert bs.flip_identities_check(bs.Direction(theta, phi)).passed


def test_weyl_to_majorana_map_canonical_is_exact():
    assert isinstance(bs.weyl_to_majorana_map(), Mat)
    assert bs.weyl_to_majorana_map() == bs.r3()


def test_energy_scaling():
    u = bs.canonical_weyl(1)
    assert np.allclose(u.scaled(2.0), 2.0 * to_numpy(u.components))
