import math

import numpy as np
import pytest

from relbell.chsh import (
    ChshReport,
    ChshSetting,
    ObservableKind,
    canonical_axes,
    chsh_in_frame,
    chsh_value,
    critical_beta,
    czachor_report,
    horodecki_max,
    optimize_axes,
)
from relbell.errors import DomainError, InconsistencyError, NoCrossingError
from relbell.observables import TSIRELSON, correlation_matrix_of, czachor_chsh
from relbell.spinstate import BellKind, boosted_bell_analytic

R = 1 / math.sqrt(2)

# first computed with critical_beta (bisection to 1e-10); the bracket test
# below pins them independently of the scan
BETA_C = {1.0: 0.8222178726673127, 2.0: 0.6317045264720919, 3.0: 0.5598699106693268}


def test_canonical_axes_values():
    s = canonical_axes("phi+")
    np.testing.assert_array_equal(s.a1.vector, [R, -R, 0])
    np.testing.assert_array_equal(s.a2.vector, [-R, -R, 0])
    s = canonical_axes("psi-")
    np.testing.assert_array_equal(s.a1.vector, [-R, -R, 0])
    np.testing.assert_array_equal(s.a2.vector, [R, -R, 0])
    for kind in BellKind:
        s = canonical_axes(kind)
        np.testing.assert_array_equal(s.b1.vector, [0, 1, 0])
        np.testing.assert_array_equal(s.b2.vector, [1, 0, 0])
        for axis in (s.a1, s.a2, s.b1, s.b2):
            assert np.linalg.norm(axis.vector) == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("omega", [0.0, 0.3, 1.2, math.pi / 2, 2.5])
def test_singlet_maximal_violation(omega):
    r = chsh_value("psi-", canonical_axes("psi-"), omega)
    assert r.value == pytest.approx(TSIRELSON, abs=1e-10)
    assert r.observable_kind is ObservableKind.COVARIANT


@pytest.mark.parametrize("omega", [0.0, 0.3, 1.2])
def test_phi_plus_maximal_violation(omega):
    assert chsh_value("phi+", canonical_axes("phi+"), omega).value == pytest.approx(TSIRELSON, abs=1e-10)


@pytest.mark.parametrize("kind", list(BellKind))
def test_degenerate_setting(kind):
    rng = np.random.default_rng(1)
    a, b = rng.normal(size=3), rng.normal(size=3)
    s = ChshSetting.of(a / np.linalg.norm(a), a / np.linalg.norm(a), b / np.linalg.norm(b), b / np.linalg.norm(b))
    r = chsh_value(kind, s, 0.7)
    assert r.value == pytest.approx(2 * r.correlations[0], abs=1e-12)
    assert abs(r.value) <= 2 + 1e-12


def test_report_invariants():
    r = chsh_value("phi-", canonical_axes("phi-"), 0.4)
    e11, e12, e21, e22 = r.correlations
    assert r.value == pytest.approx(e11 + e12 + e21 - e22, abs=1e-12)
    with pytest.raises(InconsistencyError):
        ChshReport(3.0, None, 0.0)
    with pytest.raises(InconsistencyError):
        ChshReport(1.0, (1.0, 1.0, 1.0, 1.0), 0.0)


def test_chsh_in_frame_carries_parameters():
    r = chsh_in_frame("psi+", 0.7, 2.0)
    assert (r.beta, r.delta) == (0.7, 2.0)
    assert r.value == pytest.approx(TSIRELSON, abs=1e-10)


def test_czachor_report():
    r = czachor_report(0.5, 1.0)
    assert r.observable_kind is ObservableKind.CZACHOR
    assert r.value == czachor_chsh(0.5, 1.0)
    assert r.correlations is None


def test_horodecki_reference():
    assert horodecki_max(-np.eye(3)) == pytest.approx(TSIRELSON, abs=1e-15)
    assert horodecki_max(np.diag([1.0, 0.0, 0.0])) == pytest.approx(2.0, abs=1e-15)


@pytest.mark.parametrize("omega", np.linspace(0, math.pi / 2, 7))
def test_horodecki_boosted_phi_plus(omega):
    assert horodecki_max(correlation_matrix_of(boosted_bell_analytic("phi+", omega))) == pytest.approx(
        TSIRELSON, abs=1e-10
    )


def test_horodecki_bounds_every_setting():
    rng = np.random.default_rng(9)
    for _ in range(300):
        kind = list(BellKind)[rng.integers(4)]
        omega = rng.uniform(0, math.pi / 2)
        vs = rng.normal(size=(4, 3))
        s = ChshSetting.of(*(v / np.linalg.norm(v) for v in vs))
        # the covariant value equals the rest-frame one, bounded by the rest-frame T
        bound = horodecki_max(correlation_matrix_of(boosted_bell_analytic(kind, 0.0)))
        assert abs(chsh_value(kind, s, omega).value) <= bound + 1e-9


@pytest.mark.parametrize("kind,omega", [("psi-", 0.0), ("phi+", 0.7), ("phi-", 1.0), ("psi+", math.pi / 2)])
def test_optimizer_reaches_tsirelson(kind, omega):
    setting, value = optimize_axes(kind, omega)
    assert value == pytest.approx(TSIRELSON, abs=1e-9)
    assert value <= TSIRELSON + 1e-9
    assert chsh_value(kind, setting, omega).value == pytest.approx(value, abs=1e-12)


def test_optimizer_degenerate_seed():
    _, value = optimize_axes("phi+", 0.3, seed=((0, 0, 1), (0, 0, 1)))
    assert value == pytest.approx(TSIRELSON, abs=1e-9)


def test_optimizer_is_deterministic():
    s1, v1 = optimize_axes("psi-", 0.5)
    s2, v2 = optimize_axes("psi-", 0.5)
    assert s1 == s2 and v1 == v2


@pytest.mark.parametrize("delta", sorted(BETA_C))
def test_critical_beta_regression(delta):
    beta_c = critical_beta(delta)
    assert beta_c == pytest.approx(BETA_C[delta], abs=1e-9)
    assert abs(abs(czachor_chsh(beta_c, delta)) - 2) < 1e-8


def test_critical_beta_bracket():
    b = BETA_C[3.0]
    assert czachor_chsh(b - 0.01, 3.0) > 2 > czachor_chsh(b + 0.01, 3.0)
    assert abs(czachor_chsh(b + 0.01, 3.0)) < 2


def test_critical_beta_is_first_crossing():
    b = critical_beta(2.0)
    assert np.all(np.abs(czachor_chsh(np.linspace(0, b - 1e-9, 2000), 2.0)) > 2)


def test_critical_beta_no_crossing():
    # at delta = 0 the curve 2 (1 + sqrt(1 - b^2)) / sqrt(2 - b^2) stays above 2 for b < 1
    with pytest.raises(NoCrossingError):
        critical_beta(0.0)


def test_critical_beta_domain():
    with pytest.raises(DomainError):
        critical_beta(-1.0)


@pytest.mark.parametrize("delta", np.linspace(1, 5, 9))
def test_czachor_single_crossing(delta):
    c = np.abs(czachor_chsh(np.arange(10_000) / 10_000, delta)) - 2
    assert np.count_nonzero(np.diff(np.sign(c)) != 0) == 1
