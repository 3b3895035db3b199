"""CHSH values, canonical axes, the Horodecki bound and the critical boost speed."""

import enum
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT
from .errors import ConvergenceError, DomainError, InconsistencyError, NoCrossingError
from .lorentz import rapidity_from_beta, wigner_angle_closed_form
from .observables import (
    TSIRELSON,
    MeasurementAxis,
    check_correlation_matrix,
    correlation_numeric,
    covariant_correlation_matrix,
    czachor_chsh,
)
from .spinstate import BellKind, boosted_bell_analytic


class ObservableKind(enum.Enum):
    COVARIANT = "covariant"
    CZACHOR = "czachor"


@dataclass(frozen=True)
class ChshSetting:
    a1: MeasurementAxis
    a2: MeasurementAxis
    b1: MeasurementAxis
    b2: MeasurementAxis

    @classmethod
    def of(cls, a1, a2, b1, b2):
        return cls(*(v if isinstance(v, MeasurementAxis) else MeasurementAxis.of(v) for v in (a1, a2, b1, b2)))

    def as_dict(self):
        return {k: list(getattr(self, k).vector) for k in ("a1", "a2", "b1", "b2")}


@dataclass(frozen=True)
class ChshReport:
    value: float
    correlations: tuple  # (E11, E12, E21, E22); None for the Czachor curve
    omega: float
    beta: float = None
    delta: float = None
    observable_kind: ObservableKind = ObservableKind.COVARIANT

    def __post_init__(self):
        if self.correlations is not None:
            e11, e12, e21, e22 = self.correlations
            if abs(e11 + e12 + e21 - e22 - self.value) > DEFAULT.construction:
                raise InconsistencyError("CHSH value does not match its correlations")
        if abs(self.value) > TSIRELSON + DEFAULT.consistency:
            raise InconsistencyError(f"CHSH value {self.value!r} exceeds the Tsirelson bound")


_R = 1.0 / np.sqrt(2.0)
_CANONICAL_A = {
    BellKind.PHI_PLUS: ((_R, -_R, 0.0), (-_R, -_R, 0.0)),
    BellKind.PHI_MINUS: ((-_R, _R, 0.0), (_R, _R, 0.0)),
    BellKind.PSI_PLUS: ((_R, _R, 0.0), (-_R, _R, 0.0)),
    BellKind.PSI_MINUS: ((-_R, -_R, 0.0), (_R, -_R, 0.0)),
}
_CANONICAL_B = ((0.0, 1.0, 0.0), (1.0, 0.0, 0.0))


def canonical_axes(kind):
    """Maximal-violation axes for ``kind``; b1 = y and b2 = x for every state."""
    a1, a2 = _CANONICAL_A[BellKind.parse(kind)]
    return ChshSetting.of(a1, a2, *_CANONICAL_B)


def chsh_value(kind, setting, omega, beta=None, delta=None):
    """CHSH combination of covariant correlations on the Bell state boosted by Wigner angle ``omega``."""
    state = boosted_bell_analytic(kind, omega)
    s = setting
    corr = tuple(
        correlation_numeric(state, a, b, omega)
        for a, b in ((s.a1, s.b1), (s.a1, s.b2), (s.a2, s.b1), (s.a2, s.b2))
    )
    value = corr[0] + corr[1] + corr[2] - corr[3]
    return ChshReport(value, corr, float(omega), beta, delta, ObservableKind.COVARIANT)


def frame_omega(beta, delta):
    """Wigner angle for an observer boost ``beta`` (along x) and pair rapidity ``delta`` (along +-z)."""
    return wigner_angle_closed_form(rapidity_from_beta(beta), delta)


def chsh_in_frame(kind, beta, delta, setting=None):
    setting = canonical_axes(kind) if setting is None else setting
    return chsh_value(kind, setting, frame_omega(beta, delta), beta, delta)


def czachor_report(beta, delta):
    return ChshReport(
        czachor_chsh(beta, delta), None, frame_omega(beta, delta), beta, delta, ObservableKind.CZACHOR
    )


def horodecki_max(t):
    """Largest CHSH value reachable on a state with correlation matrix ``t``: 2 sqrt(s1^2 + s2^2)."""
    s = np.linalg.svd(check_correlation_matrix(t), compute_uv=False)
    return float(2.0 * np.hypot(s[0], s[1]))


def _direction(v, other):
    n = np.linalg.norm(v)
    if n > 1e-12:
        return v / n
    # degenerate update: any unit vector orthogonal to the partner axis is optimal
    if np.linalg.norm(other) <= 1e-12:
        return np.array([1.0, 0.0, 0.0])
    k = int(np.argmin(np.abs(other)))
    u = np.cross(other, np.eye(3)[k])
    return u / np.linalg.norm(u)


def optimize_axes(kind, omega, seed=None, max_iter=100, tol=1e-12):
    """Maximize the covariant CHSH value over all four axes by alternating updates.

    With a1, a2 fixed the best b's are b1 ~ M^T (a1 + a2), b2 ~ M^T (a1 - a2)
    and symmetrically for the a's, where M is the covariant correlation
    matrix. ``seed`` is (a1, a2); the default is (x, y). Returns
    ``(setting, value)``.
    """
    m = covariant_correlation_matrix(boosted_bell_analytic(kind, omega), omega)
    if seed is None:
        a1, a2 = np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0])
    else:
        a1, a2 = (np.asarray(v, dtype=float) / np.linalg.norm(v) for v in seed)

    prev = None
    for _ in range(max_iter):
        b1 = _direction(m.T @ (a1 + a2), m.T @ (a1 - a2))
        b2 = _direction(m.T @ (a1 - a2), b1)
        a1 = _direction(m @ (b1 + b2), m @ (b1 - b2))
        a2 = _direction(m @ (b1 - b2), a1)
        value = a1 @ m @ (b1 + b2) + a2 @ m @ (b1 - b2)
        if prev is not None and abs(value - prev) < tol:
            break
        prev = value
    else:
        raise ConvergenceError(f"axis optimization did not converge in {max_iter} iterations")

    setting = ChshSetting.of(a1, a2, b1, b2)
    return setting, chsh_value(kind, setting, omega).value


def critical_beta(delta, n_scan=10_000, tol=1e-10):
    """Smallest beta in (0, 1) where the Czachor CHSH curve reaches |C| = 2.

    The curve is scanned on beta = i / n_scan and the first sign change of
    |C| - 2 is refined by bisection to ``tol`` in beta.
    """
    if not delta >= 0:
        raise DomainError(f"particle rapidity must be >= 0, got {delta!r}")

    def f(b):
        return abs(czachor_chsh(b, delta)) - 2.0

    scan = np.abs(czachor_chsh(np.arange(n_scan) / n_scan, delta)) - 2.0
    hits = np.flatnonzero((scan[:-1] > 0.0) & (scan[1:] <= 0.0))
    if hits.size == 0:
        raise NoCrossingError(f"|C| stays above 2 for all scanned beta at delta={delta!r}")
    lo, hi = hits[0] / n_scan, (hits[0] + 1) / n_scan

    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if f(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return float(0.5 * (lo + hi))
