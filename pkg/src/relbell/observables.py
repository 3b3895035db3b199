"""Covariant spin observable, Wigner-rotated measurement axes and correlations.

A boosted observable is never built as an operator on momentum-spin space:
for sharp momenta, boosting the spin observable is the same as measuring the
rest-frame observable along Wigner-rotated axes, a -> a_R for particle A and
b -> b_R (opposite sense) for particle B.
"""

from dataclasses import dataclass

import numpy as np

from .config import DEFAULT
from .errors import DomainError, InconsistencyError
from .lorentz import tan_wigner_angle
from .spinstate import PAULI, BellKind

TSIRELSON = 2.0 * np.sqrt(2.0)


@dataclass(frozen=True)
class MeasurementAxis:
    """Unit spatial axis; the four-axis is (0, x, y, z) in the rest frame."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        n = np.sqrt(self.x**2 + self.y**2 + self.z**2)
        if not np.isfinite(n) or abs(n - 1.0) > DEFAULT.construction:
            raise DomainError(f"measurement axis must be a unit vector, got norm {n!r}")

    @classmethod
    def of(cls, v, normalize=False):
        v = np.asarray(v, dtype=float)
        if normalize:
            v = v / np.linalg.norm(v)
        return cls(*(float(c) for c in v))

    @property
    def vector(self):
        return np.array([self.x, self.y, self.z])


@dataclass(frozen=True)
class CovariantObservable:
    """2 a.W / m for the axis a, whose rest-frame form is a.sigma."""

    axis: MeasurementAxis

    def rest_matrix(self):
        return observable_matrix(self.axis)

    def boosted_matrix(self, omega, particle="A"):
        rot = {"A": rotate_axis_a, "B": rotate_axis_b}[particle]
        return observable_matrix(rot(self.axis, omega))


def _axis(a):
    return a if isinstance(a, MeasurementAxis) else MeasurementAxis.of(a)


def rotate_axis_a(a, omega):
    a = _axis(a)
    c, s = np.cos(omega), np.sin(omega)
    return MeasurementAxis.of((a.x * c + a.z * s, a.y, -a.x * s + a.z * c))


def rotate_axis_b(b, omega):
    b = _axis(b)
    c, s = np.cos(omega), np.sin(omega)
    return MeasurementAxis.of((b.x * c - b.z * s, b.y, b.x * s + b.z * c))


def observable_matrix(a):
    """a.sigma, i.e. twice the spin along ``a``."""
    a = _axis(a)
    return a.x * PAULI[0] + a.y * PAULI[1] + a.z * PAULI[2]


def _real_expectation(amps, op, what):
    val = complex(np.vdot(amps, op @ amps))
    if abs(val.imag) > DEFAULT.imag_residual:
        raise InconsistencyError(f"{what} has imaginary part {val.imag:.3e}")
    return val.real


def correlation_numeric(state, a, b, omega):
    """<state| (a_R.sigma) (x) (b_R.sigma) |state> for a state boosted with Wigner angle ``omega``."""
    op = np.kron(observable_matrix(rotate_axis_a(a, omega)), observable_matrix(rotate_axis_b(b, omega)))
    return _real_expectation(state.amplitudes, op, "correlation")


def correlation_closed_form(kind, a, b):
    a, b = _axis(a), _axis(b)
    kind = BellKind.parse(kind)
    xx, yy, zz = a.x * b.x, a.y * b.y, a.z * b.z
    if kind is BellKind.PHI_PLUS:
        return xx - yy + zz
    if kind is BellKind.PHI_MINUS:
        return -xx + yy + zz
    if kind is BellKind.PSI_PLUS:
        return xx + yy - zz
    return -xx - yy - zz


def correlation_matrix_of(state):
    """T_ij = <sigma_i (x) sigma_j>."""
    t = np.empty((3, 3))
    for i, si in enumerate(PAULI):
        for j, sj in enumerate(PAULI):
            t[i, j] = _real_expectation(state.amplitudes, np.kron(si, sj), "correlation tensor entry")
    return check_correlation_matrix(t)


def check_correlation_matrix(t, tol=DEFAULT.consistency):
    t = np.asarray(t, dtype=float)
    if t.shape != (3, 3):
        raise DomainError(f"correlation matrix must be 3x3, got shape {t.shape}")
    if np.max(np.abs(t)) > 1.0 + tol:
        raise InconsistencyError("correlation entry outside [-1, 1]")
    if np.linalg.svd(t, compute_uv=False)[0] > 1.0 + tol:
        raise InconsistencyError("correlation matrix has a singular value above 1")
    return t


def covariant_correlation_matrix(state, omega):
    """Matrix M with <O'(a, b)> = a . M . b for the covariant observable on ``state``."""
    basis = np.eye(3)
    return check_correlation_matrix(
        [[correlation_numeric(state, basis[i], basis[j], omega) for j in range(3)] for i in range(3)]
    )


def _check_frame(beta, delta):
    beta = np.asarray(beta, dtype=float)
    delta = np.asarray(delta, dtype=float)
    if not np.all((beta >= 0.0) & (beta < 1.0)):
        raise DomainError("boost speed must satisfy 0 <= beta < 1")
    if not np.all(delta >= 0.0):
        raise DomainError("particle rapidity must be >= 0")
    return beta, delta


def _scalar_or_array(x):
    return float(x) if np.ndim(x) == 0 else x


def czachor_chsh(beta, delta):
    """CHSH value of the boosted singlet measured with Czachor's spin observable.

    Uses the singlet's canonical axes; the value is
    2 / sqrt(2 - beta^2) * (sqrt(1 - beta^2) + cos 2 Omega). Accepts arrays.
    """
    beta, delta = _check_frame(beta, delta)
    t = tan_wigner_angle(np.arctanh(beta), delta)
    cos2 = (1.0 - t * t) / (1.0 + t * t)
    return _scalar_or_array(2.0 / np.sqrt(2.0 - beta * beta) * (np.sqrt(1.0 - beta * beta) + cos2))


def czachor_chsh_substituted(beta, delta):
    """The same curve with the Wigner angle written directly in beta.

    tan Omega = beta sinh d / (1 + sqrt(1 - beta^2) cosh d), so
    cos 2 Omega = (D^2 - N^2) / (D^2 + N^2) with N, D that numerator and
    denominator. Kept as an independent check on :func:`czachor_chsh`.
    """
    beta, delta = _check_frame(beta, delta)
    g_inv = np.sqrt(1.0 - beta * beta)
    num = beta * np.sinh(delta)
    den = 1.0 + g_inv * np.cosh(delta)
    cos2 = (den * den - num * num) / (den * den + num * num)
    return _scalar_or_array(2.0 * (g_inv + cos2) / np.sqrt(2.0 - beta * beta))


def czachor_ultrarelativistic_limit(delta):
    """beta -> 1 limit of :func:`czachor_chsh`: 4 sech^2 delta - 2."""
    return float(4.0 / np.cosh(delta) ** 2 - 2.0)
