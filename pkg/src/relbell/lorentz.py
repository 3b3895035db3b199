"""Special-relativistic kinematics in units with c = 1.

Four-vectors are ordered (t, x, y, z) with metric signature (+, -, -, -).
Lorentz transformations are plain 4x4 ``numpy`` arrays acting on column
vectors, so the Wigner little-group element is a literal product of three
matrices.
"""

from dataclasses import dataclass

import numpy as np

from .config import DEFAULT
from .errors import DomainError, InconsistencyError

ETA = np.diag([1.0, -1.0, -1.0, -1.0])
ETA.setflags(write=False)

# extended precision for the little-group product (same as float64 on some platforms)
_XP = np.longdouble

X_HAT = (1.0, 0.0, 0.0)
Y_HAT = (0.0, 1.0, 0.0)
Z_HAT = (0.0, 0.0, 1.0)


def _unit(v, what="direction", tol=DEFAULT.construction):
    v = np.asarray(v, dtype=float)
    if v.shape != (3,):
        raise DomainError(f"{what} must be a 3-vector, got shape {v.shape}")
    n = np.linalg.norm(v)
    if not np.isfinite(n) or abs(n - 1.0) > tol:
        raise DomainError(f"{what} must have unit norm, got |v| = {n!r}")
    return v


def minkowski_dot(p, q):
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    return p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3]


@dataclass(frozen=True)
class FourVector:
    t: float
    x: float
    y: float
    z: float

    @classmethod
    def from_array(cls, a):
        a = np.asarray(a, dtype=float)
        if a.shape != (4,):
            raise DomainError(f"four-vector must have 4 components, got shape {a.shape}")
        return cls(*(float(c) for c in a))

    @classmethod
    def at_rest(cls, m):
        return cls(float(m), 0.0, 0.0, 0.0)

    def __array__(self, dtype=None, copy=None):
        return np.array([self.t, self.x, self.y, self.z], dtype=dtype or float)

    @property
    def spatial(self):
        return np.array([self.x, self.y, self.z])

    def norm2(self):
        """Minkowski square t^2 - |x|^2."""
        return minkowski_dot(self, self)


def as_array(p):
    """Return ``p`` (a FourVector or array-like) as a float array of length 4."""
    a = np.asarray(p, dtype=float)
    if a.shape != (4,):
        raise DomainError(f"four-vector must have 4 components, got shape {a.shape}")
    return a


def rapidity_from_beta(beta):
    beta = float(beta)
    if not 0.0 <= beta < 1.0:
        raise DomainError(f"boost speed must satisfy 0 <= beta < 1, got {beta!r}")
    return float(np.arctanh(beta))


def beta_from_rapidity(alpha):
    alpha = float(alpha)
    if not alpha >= 0.0:
        raise DomainError(f"rapidity must be >= 0, got {alpha!r}")
    return float(np.tanh(alpha))


@dataclass(frozen=True)
class BoostParams:
    """Boost speed ``beta`` along the unit vector ``direction``."""

    beta: float
    direction: tuple = X_HAT

    def __post_init__(self):
        rapidity_from_beta(self.beta)
        d = _unit(self.direction)
        object.__setattr__(self, "beta", float(self.beta))
        object.__setattr__(self, "direction", tuple(float(c) for c in d))

    @classmethod
    def from_rapidity(cls, alpha, direction=X_HAT):
        return cls(beta_from_rapidity(alpha), direction)

    @property
    def alpha(self):
        return float(np.arctanh(self.beta))

    @property
    def gamma(self):
        return 1.0 / np.sqrt(1.0 - self.beta**2)


@dataclass(frozen=True)
class ParticleKinematics:
    """Massive particle with rapidity ``delta`` (cosh delta = p0/m) along ``direction``."""

    mass: float
    direction: tuple
    delta: float

    def __post_init__(self):
        if not self.mass > 0:
            raise DomainError(f"mass must be positive, got {self.mass!r}")
        if not self.delta >= 0:
            raise DomainError(f"particle rapidity must be >= 0, got {self.delta!r}")
        d = _unit(self.direction)
        object.__setattr__(self, "direction", tuple(float(c) for c in d))

    @property
    def speed(self):
        return float(np.tanh(self.delta))

    def momentum(self):
        m, d = self.mass, self.delta
        p = m * np.sinh(d) * np.asarray(self.direction)
        return FourVector(m * np.cosh(d), *p)


def check_lorentz(L, tol=DEFAULT.consistency):
    """Raise unless ``L`` is a proper orthochronous Lorentz matrix.

    The tolerance is relative to the squared size of the entries, which grows
    like cosh^2 of the total rapidity.
    """
    L = np.asarray(L, dtype=float)
    if L.shape != (4, 4):
        raise DomainError(f"Lorentz matrix must be 4x4, got shape {L.shape}")
    scale = max(1.0, float(np.max(np.abs(L))) ** 2)
    defect = np.max(np.abs(L.T @ ETA @ L - ETA))
    if defect > tol * scale:
        raise InconsistencyError(f"matrix does not preserve the metric (defect {defect:.3e})")
    if L[0, 0] < 1.0 - tol * scale or np.linalg.det(L) < 0:
        raise InconsistencyError("matrix is not proper orthochronous")
    return L


def inverse_lorentz(L):
    """Exact inverse of a Lorentz matrix, eta L^T eta."""
    return ETA @ np.asarray(L, dtype=float).T @ ETA


def _pure_boost(u, dtype=float):
    # u = gamma * beta * n (spatial part of the four-velocity)
    u = np.asarray(u, dtype=dtype)
    g = np.sqrt(1 + u @ u)
    L = np.empty((4, 4), dtype=dtype)
    L[0, 0] = g
    L[0, 1:] = u
    L[1:, 0] = u
    L[1:, 1:] = np.eye(3, dtype=dtype) + np.outer(u, u) / (1 + g)
    return L


def boost_matrix(b, dtype=float):
    """Active pure boost taking a particle at rest to velocity ``b.beta * b.direction``."""
    if not isinstance(b, BoostParams):
        raise TypeError("boost_matrix expects BoostParams")
    if b.beta == 0.0:
        return np.eye(4, dtype=dtype)
    beta = np.asarray(b.beta, dtype=dtype)
    gamma = 1 / np.sqrt(1 - beta * beta)
    return _pure_boost(gamma * beta * np.asarray(b.direction, dtype=dtype), dtype)


def _check_on_shell(p, m, tol):
    if not m > 0:
        raise DomainError(f"mass must be positive, got {m!r}")
    p = as_array(p)
    if p[0] <= 0 or abs(minkowski_dot(p, p) - m * m) > tol * max(m * m, p[0] ** 2):
        raise DomainError(f"four-momentum {p.tolist()} is not on shell for mass {m!r}")
    return p


def standard_boost(p, m, tol=DEFAULT.consistency):
    """The pure boost L(p) with L(p) (m, 0, 0, 0) = p."""
    p = _check_on_shell(p, m, tol)
    return _pure_boost(p[1:] / m)


def little_group_element(boost, p, m, tol=DEFAULT.consistency):
    """Wigner's little-group element W = L^-1(boost p) . boost . L(p).

    ``boost`` is a 4x4 Lorentz matrix or a :class:`BoostParams`. The product
    is formed in extended precision: its entries grow like the product of
    the three gamma factors while W itself is O(1), so double precision
    loses about 1e-11 at rapidities near 5. Passing ``BoostParams`` avoids
    rounding the boost to double before the product.
    """
    if isinstance(boost, BoostParams):
        lam = boost_matrix(boost, _XP)
    else:
        lam = check_lorentz(boost, tol).astype(_XP)
    p = _check_on_shell(p, m, tol)
    lp = _pure_boost(p[1:].astype(_XP) / m, _XP)
    q = lam @ p.astype(_XP)
    lq = _pure_boost(q[1:] / m, _XP)
    eta = ETA.astype(_XP)
    w = (eta @ lq.T @ eta @ lam @ lp).astype(float)
    k = np.array([1.0, 0.0, 0.0, 0.0])
    dev = np.max(np.abs(w @ k - k))
    if dev > tol:
        raise InconsistencyError(f"little-group element moves the rest momentum (deviation {dev:.3e})")
    return w


def rotation_matrix(axis, angle):
    """Right-handed active rotation by ``angle`` about the unit vector ``axis``."""
    n = _unit(axis, "rotation axis", DEFAULT.consistency)
    K = np.array([[0.0, -n[2], n[1]], [n[2], 0.0, -n[0]], [-n[1], n[0], 0.0]])
    return np.eye(3) + np.sin(angle) * K + (1.0 - np.cos(angle)) * (K @ K)


@dataclass(frozen=True)
class WignerRotation:
    """Axis-angle form of a little-group rotation, angle in (-pi, pi]."""

    axis: tuple
    angle: float

    def __post_init__(self):
        n = _unit(self.axis, "rotation axis", DEFAULT.consistency)
        object.__setattr__(self, "axis", tuple(float(c) for c in n))
        object.__setattr__(self, "angle", float(self.angle))

    def matrix(self):
        return rotation_matrix(self.axis, self.angle)

    def lorentz(self):
        L = np.eye(4)
        L[1:, 1:] = self.matrix()
        return L


def extract_rotation(w, tol=DEFAULT.consistency):
    """Read the axis-angle rotation off a little-group element.

    The axis sign is fixed so that its largest-magnitude component is
    positive; the angle then carries the sense of rotation. A vanishing
    rotation is reported about z.
    """
    w = np.asarray(w, dtype=float)
    if w.shape != (4, 4):
        raise DomainError(f"expected a 4x4 matrix, got shape {w.shape}")
    if max(abs(w[0, 0] - 1.0), np.max(np.abs(w[0, 1:])), np.max(np.abs(w[1:, 0]))) > tol:
        raise InconsistencyError("matrix does not fix the rest momentum")
    R = w[1:, 1:]
    defect = np.max(np.abs(R.T @ R - np.eye(3)))
    if defect > tol or np.linalg.det(R) < 0:
        raise InconsistencyError(f"spatial block is not a rotation (orthogonality defect {defect:.3e})")

    v = 0.5 * np.array([R[2, 1] - R[1, 2], R[0, 2] - R[2, 0], R[1, 0] - R[0, 1]])
    s = np.linalg.norm(v)
    c = 0.5 * (np.trace(R) - 1.0)
    angle = float(np.arctan2(s, c))
    if angle <= 1e-15:
        return WignerRotation(Z_HAT, 0.0)
    if c < -0.5:
        # near pi the antisymmetric part is small; take the axis from R + R^T
        S = 0.5 * (R + R.T) - c * np.eye(3)
        i = int(np.argmax(np.diag(S)))
        n = S[:, i] / np.linalg.norm(S[:, i])
        if s > 0 and n @ v < 0:
            n = -n
    else:
        n = v / s
    i = int(np.argmax(np.abs(n)))
    if n[i] < 0:
        n = -n
        if angle < np.pi:
            angle = -angle
    return WignerRotation(tuple(n / np.linalg.norm(n)), angle)


def tan_wigner_angle(alpha, delta):
    """tan of the Wigner angle for a boost perpendicular to the particle momentum.

    Evaluated as tanh(a) tanh(d) / (sech a + sech d), which is the usual
    sinh a sinh d / (cosh a + cosh d) with numerator and denominator divided
    by cosh a cosh d so large rapidities do not overflow.
    """
    alpha = np.asarray(alpha, dtype=float)
    delta = np.asarray(delta, dtype=float)
    if np.any(alpha < 0) or np.any(delta < 0):
        raise DomainError("rapidities must be >= 0")
    with np.errstate(over="ignore", divide="ignore"):
        num = np.tanh(alpha) * np.tanh(delta)
        out = num / (1.0 / np.cosh(alpha) + 1.0 / np.cosh(delta))
    return float(out) if out.ndim == 0 else out


def wigner_angle_closed_form(alpha, delta):
    """Wigner angle for a boost of rapidity ``alpha`` along x on a particle of rapidity ``delta`` along z."""
    alpha = np.asarray(alpha, dtype=float)
    delta = np.asarray(delta, dtype=float)
    if np.any(alpha < 0) or np.any(delta < 0):
        raise DomainError("rapidities must be >= 0")
    with np.errstate(over="ignore"):
        out = np.arctan2(np.tanh(alpha) * np.tanh(delta), 1.0 / np.cosh(alpha) + 1.0 / np.cosh(delta))
    return float(out) if out.ndim == 0 else out


def wigner_rotation(beta, delta, momentum_sign=+1, mass=1.0):
    """Little-group rotation for a boost ``beta`` along x and a particle moving along +-z.

    Runs the full matrix pipeline; ``momentum_sign=-1`` gives the parity
    partner, whose rotation is the inverse one.
    """
    if momentum_sign not in (1, -1):
        raise DomainError("momentum_sign must be +1 or -1")
    particle = ParticleKinematics(mass, (0.0, 0.0, float(momentum_sign)), delta)
    w = little_group_element(BoostParams(beta, X_HAT), particle.momentum(), mass)
    return extract_rotation(w)
