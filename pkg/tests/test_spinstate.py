import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from relbell.errors import DomainError
from relbell.lorentz import Y_HAT, Z_HAT, FourVector, ParticleKinematics, WignerRotation, boost_matrix, BoostParams
from relbell.spinstate import (
    IDENTITY2,
    PAULI,
    BellKind,
    TwoQubitState,
    bell_state,
    boost_state,
    boosted_bell_analytic,
    boosted_bell_numeric,
    parity,
    su2_from_rotation,
    wigner_pair,
)

R = 1 / math.sqrt(2)
angles = st.floats(-10.0, 10.0)
unit_vectors = st.tuples(*[st.floats(-1, 1)] * 3).filter(lambda v: np.linalg.norm(v) > 0.1).map(
    lambda v: tuple(np.asarray(v) / np.linalg.norm(v))
)


def random_state(rng):
    v = rng.normal(size=4) + 1j * rng.normal(size=4)
    return TwoQubitState(v / np.linalg.norm(v))


def test_su2_zero_angle():
    np.testing.assert_allclose(su2_from_rotation(WignerRotation(Z_HAT, 0.0)), IDENTITY2, atol=0)


@pytest.mark.parametrize("omega", [0.1, 0.4208, 1.0, math.pi / 2])
def test_su2_matches_wigner_matrix(omega):
    c, s = math.cos(omega / 2), math.sin(omega / 2)
    np.testing.assert_allclose(su2_from_rotation(WignerRotation(Y_HAT, omega)), [[c, -s], [s, c]], atol=1e-15)


def test_su2_double_cover():
    np.testing.assert_allclose(su2_from_rotation(WignerRotation(Y_HAT, 2 * math.pi)), -IDENTITY2, atol=1e-15)


@given(unit_vectors, angles, unit_vectors)
def test_su2_rotates_pauli_vector(axis, angle, v):
    r = WignerRotation(axis, angle)
    d = su2_from_rotation(r)
    np.testing.assert_allclose(d.conj().T @ d, IDENTITY2, atol=1e-12)
    assert np.linalg.det(d) == pytest.approx(1.0, abs=1e-12)
    lhs = d @ sum(c * s for c, s in zip(v, PAULI)) @ d.conj().T
    rhs = sum(c * s for c, s in zip(r.matrix() @ np.asarray(v), PAULI))
    np.testing.assert_allclose(lhs, rhs, atol=1e-12)


def test_bell_amplitudes():
    np.testing.assert_array_equal(bell_state(BellKind.PHI_PLUS).amplitudes, [R, 0, 0, R])
    np.testing.assert_array_equal(bell_state(BellKind.PHI_MINUS).amplitudes, [R, 0, 0, -R])
    np.testing.assert_array_equal(bell_state(BellKind.PSI_PLUS).amplitudes, [0, R, R, 0])
    np.testing.assert_array_equal(bell_state(BellKind.PSI_MINUS).amplitudes, [0, R, -R, 0])


@pytest.mark.parametrize("kind", list(BellKind))
def test_bell_normalized(kind):
    assert np.linalg.norm(bell_state(kind).amplitudes) == pytest.approx(1.0, abs=1e-15)


def test_bell_kind_order_and_parse():
    assert [k.value for k in BellKind] == ["phi+", "phi-", "psi+", "psi-"]
    assert BellKind.parse("PSI-") is BellKind.PSI_MINUS
    with pytest.raises(DomainError):
        BellKind.parse("singlet")


def test_bell_state_carries_momenta():
    p = ParticleKinematics(1.0, Z_HAT, 1.0).momentum()
    s = bell_state("psi-", p, parity(p))
    assert s.momenta == (p, parity(p))


def test_state_rejects_unnormalized():
    with pytest.raises(DomainError):
        TwoQubitState([1, 1, 0, 0])


def test_parity():
    assert parity(FourVector(5.0, 0, 0, 3.0)) == FourVector(5.0, 0, 0, -3.0)
    assert parity(FourVector(1.0, 0, 0, 0)) == FourVector(1.0, 0, 0, 0)
    p = FourVector(3.0, 1.0, -2.0, 0.5)
    assert parity(parity(p)) == p


def test_boost_state_identity():
    s = bell_state("phi+")
    np.testing.assert_array_equal(boost_state(s, IDENTITY2, IDENTITY2).amplitudes, s.amplitudes)


def test_boost_state_rejects_non_unitary():
    with pytest.raises(DomainError):
        boost_state(bell_state("phi+"), 2 * IDENTITY2, IDENTITY2)


def test_boost_state_maps_momenta():
    p = ParticleKinematics(1.0, Z_HAT, 1.0).momentum()
    lam = boost_matrix(BoostParams(0.5))
    s = boost_state(bell_state("phi+", p, parity(p)), IDENTITY2, IDENTITY2, boost=lam)
    np.testing.assert_allclose(np.asarray(s.momenta[0]), lam @ np.asarray(p))
    np.testing.assert_allclose(np.asarray(s.momenta[1]), lam @ np.asarray(parity(p)))


@pytest.mark.parametrize("omega", [0.3, 1.1, math.pi / 2])
def test_phi_minus_invariant(omega):
    dA, dB = wigner_pair(omega)
    out = boost_state(bell_state("phi-"), dA, dB)
    assert out.distance(bell_state("phi-")) <= 1e-12


@pytest.mark.parametrize("omega", [0.3, 1.1, math.pi / 2])
def test_psi_minus_rotates(omega):
    dA, dB = wigner_pair(omega)
    out = boost_state(bell_state("psi-"), dA, dB)
    expected = math.sin(omega) * bell_state("phi+").amplitudes + math.cos(omega) * bell_state("psi-").amplitudes
    np.testing.assert_allclose(out.amplitudes, expected, atol=1e-12)


@pytest.mark.parametrize("kind", list(BellKind))
def test_analytic_zero_angle(kind):
    assert boosted_bell_analytic(kind, 0.0).distance(bell_state(kind)) == 0.0


def test_analytic_phi_plus_quarter_turn():
    out = boosted_bell_analytic("phi+", math.pi / 2)
    np.testing.assert_allclose(out.amplitudes, -bell_state("psi-").amplitudes, atol=1e-15)


@pytest.mark.parametrize("kind", list(BellKind))
def test_analytic_matches_spinor_action(kind):
    for omega in np.linspace(-math.pi, math.pi, 100):
        assert boosted_bell_analytic(kind, omega).distance(boosted_bell_numeric(kind, omega)) <= 1e-12


@given(angles)
def test_invariant_subspace(omega):
    for kind in (BellKind.PHI_MINUS, BellKind.PSI_PLUS):
        out = boosted_bell_numeric(kind, omega)
        assert abs(abs(out.overlap(bell_state(kind))) - 1.0) <= 1e-12
        assert out.distance(bell_state(kind)) <= 1e-12


@given(angles, angles)
def test_rotation_subspace_composes(w1, w2):
    for kind in (BellKind.PHI_PLUS, BellKind.PSI_MINUS):
        d1a, d1b = wigner_pair(w1)
        d2a, d2b = wigner_pair(w2)
        twice = boost_state(boost_state(bell_state(kind), d1a, d1b), d2a, d2b)
        assert twice.distance(boosted_bell_analytic(kind, w1 + w2)) <= 1e-12


def test_double_cover_cancels_on_pairs():
    rng = np.random.default_rng(3)
    dA, dB = wigner_pair(2 * math.pi)
    for _ in range(20):
        s = random_state(rng)
        assert boost_state(s, dA, dB).distance(s) <= 1e-12


def test_norm_preserved_random():
    rng = np.random.default_rng(11)
    for _ in range(200):
        s = random_state(rng)
        axes = rng.normal(size=(2, 3))
        dA = su2_from_rotation(WignerRotation(axes[0] / np.linalg.norm(axes[0]), rng.uniform(-3, 3)))
        dB = su2_from_rotation(WignerRotation(axes[1] / np.linalg.norm(axes[1]), rng.uniform(-3, 3)))
        assert np.linalg.norm(boost_state(s, dA, dB).amplitudes) == pytest.approx(1.0, abs=1e-12)
