"""Brute-force checks of the closed forms.

Every oracle rebuilds its quantity from the 4x4 little-group matrices and
explicit matrix products. The spinor representation is assembled here from
the rotation's quaternion rather than through
:func:`relbell.spinstate.su2_from_rotation`, and rotated axes come from the
little-group rotation blocks rather than the axis-rotation formulas.
"""

from dataclasses import asdict, dataclass

import numpy as np

from .config import DEFAULT
from .lorentz import (
    X_HAT,
    BoostParams,
    ParticleKinematics,
    little_group_element,
    rapidity_from_beta,
    wigner_angle_closed_form,
    wigner_rotation,
)
from .observables import MeasurementAxis, correlation_closed_form, czachor_chsh, czachor_chsh_substituted
from .spinstate import PAULI, BellKind, bell_state, boost_state, boosted_bell_analytic

GRIDS = {
    # (wigner n x n, boosted-state n x n, expectation trials)
    "default": (50, 20, 1000),
    "coarse": (10, 5, 100),
}
BETA_RANGE = (0.0, 0.99)
DELTA_RANGE = (0.0, 5.0)


@dataclass(frozen=True)
class OracleReport:
    quantity: str
    closed_form: float
    brute_force: float
    abs_error: float
    tolerance: float
    passed: bool

    @classmethod
    def compare(cls, quantity, closed_form, brute_force, tolerance, abs_error=None):
        if abs_error is None:
            abs_error = abs(closed_form - brute_force)
        abs_error = float(abs_error)
        return cls(quantity, float(closed_form), float(brute_force), abs_error, tolerance, abs_error <= tolerance)

    def as_dict(self):
        return asdict(self)


def _little_group_blocks(beta, delta, mass=1.0):
    # spatial rotation blocks for the particle along +z and its partner along -z
    boost = BoostParams(beta, X_HAT)
    blocks = []
    for sign in (1.0, -1.0):
        p = ParticleKinematics(mass, (0.0, 0.0, sign), delta).momentum()
        blocks.append(little_group_element(boost, p, mass)[1:, 1:])
    return blocks


def _spinor_from_block(r):
    # unit quaternion (w, v) with w >= 0; exp(-i t n.sigma/2) = w - i v.sigma
    w = 0.5 * np.sqrt(max(0.0, 1.0 + np.trace(r)))
    v = np.array([r[2, 1] - r[1, 2], r[0, 2] - r[2, 0], r[1, 0] - r[0, 1]]) / (4.0 * w)
    return w * np.eye(2) - 1j * sum(c * s for c, s in zip(v, PAULI))


def _brute_boosted_state(kind, beta, delta):
    ra, rb = _little_group_blocks(beta, delta)
    state = boost_state(bell_state(kind), _spinor_from_block(ra), _spinor_from_block(rb))
    return state, ra, rb


def oracle_wigner_angle(beta, delta, tolerance=DEFAULT.wigner_angle):
    closed = wigner_angle_closed_form(rapidity_from_beta(beta), delta)
    rot = wigner_rotation(beta, delta, +1)
    # signed angle about +y; an axis off y shows up as an error
    brute = rot.angle * rot.axis[1] if rot.angle != 0.0 else 0.0
    err = abs(closed - brute) + np.hypot(rot.axis[0], rot.axis[2]) * abs(rot.angle)
    return OracleReport.compare(f"wigner_angle(beta={beta:.6g}, delta={delta:.6g})", closed, brute, tolerance, err)


def oracle_boosted_state(kind, beta, delta, tolerance=DEFAULT.boosted_state):
    kind = BellKind.parse(kind)
    omega = wigner_angle_closed_form(rapidity_from_beta(beta), delta)
    closed = boosted_bell_analytic(kind, omega)
    brute, _, _ = _brute_boosted_state(kind, beta, delta)
    err = closed.distance(brute)
    return OracleReport.compare(
        f"boosted_state({kind.value}, beta={beta:.6g}, delta={delta:.6g})",
        1.0, 1.0 - err, tolerance, err,
    )


def oracle_expectation(kind, a, b, beta, delta, tolerance=DEFAULT.expectation):
    kind = BellKind.parse(kind)
    a = a if isinstance(a, MeasurementAxis) else MeasurementAxis.of(a)
    b = b if isinstance(b, MeasurementAxis) else MeasurementAxis.of(b)
    state, ra, rb = _brute_boosted_state(kind, beta, delta)
    a_r, b_r = ra @ a.vector, rb @ b.vector
    op = np.kron(sum(c * s for c, s in zip(a_r, PAULI)), sum(c * s for c, s in zip(b_r, PAULI)))
    brute = np.vdot(state.amplitudes, op @ state.amplitudes)
    closed = correlation_closed_form(kind, a, b)
    err = abs(closed - brute)  # includes any imaginary residual
    return OracleReport.compare(
        f"expectation({kind.value}, a={np.round(a.vector, 6).tolist()}, b={np.round(b.vector, 6).tolist()}, "
        f"beta={beta:.6g}, delta={delta:.6g})",
        closed, brute.real, tolerance, err,
    )


def oracle_czachor(beta, delta, tolerance=DEFAULT.construction):
    return OracleReport.compare(
        f"czachor_chsh(beta={beta:.6g}, delta={delta:.6g})",
        czachor_chsh(beta, delta), czachor_chsh_substituted(beta, delta), tolerance,
    )


def _random_axis(rng):
    v = rng.normal(size=3)
    return MeasurementAxis.of(v / np.linalg.norm(v))


def run_suite(grid="default", tolerances=DEFAULT, seed=20040818):
    """Run every oracle family; returns ``{family: [OracleReport, ...]}``."""
    n_angle, n_state, n_trials = GRIDS[grid]
    out = {"wigner_angle": [], "boosted_state": [], "expectation": [], "czachor_chsh": []}

    for beta in np.linspace(*BETA_RANGE, n_angle):
        for delta in np.linspace(*DELTA_RANGE, n_angle):
            out["wigner_angle"].append(oracle_wigner_angle(beta, delta, tolerances.wigner_angle))
            out["czachor_chsh"].append(oracle_czachor(beta, delta, tolerances.construction))

    for kind in BellKind:
        for beta in np.linspace(*BETA_RANGE, n_state):
            for delta in np.linspace(*DELTA_RANGE, n_state):
                out["boosted_state"].append(oracle_boosted_state(kind, beta, delta, tolerances.boosted_state))

    rng = np.random.default_rng(seed)
    kinds = list(BellKind)
    for _ in range(n_trials):
        kind = kinds[rng.integers(len(kinds))]
        a, b = _random_axis(rng), _random_axis(rng)
        beta = rng.uniform(*BETA_RANGE)
        delta = rng.uniform(*DELTA_RANGE)
        out["expectation"].append(oracle_expectation(kind, a, b, beta, delta, tolerances.expectation))
    return out
