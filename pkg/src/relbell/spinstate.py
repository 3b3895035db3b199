"""Two-qubit spin states, the Bell basis and the spin-1/2 Wigner representation.

Amplitudes are ordered (up-up, up-down, down-up, down-down), with particle A
(momentum p) as the left tensor factor and its parity partner B (momentum Pp)
on the right.
"""

import enum
from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT
from .errors import DomainError
from .lorentz import FourVector, WignerRotation, Y_HAT, as_array

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)
IDENTITY2 = np.eye(2, dtype=complex)
for _m in (*PAULI, IDENTITY2):
    _m.setflags(write=False)

_S = 1.0 / np.sqrt(2.0)


class BellKind(enum.Enum):
    """The four Bell states, in a fixed order used for output columns."""

    PHI_PLUS = "phi+"
    PHI_MINUS = "phi-"
    PSI_PLUS = "psi+"
    PSI_MINUS = "psi-"

    @classmethod
    def parse(cls, label):
        if isinstance(label, cls):
            return label
        try:
            return cls(str(label).strip().lower())
        except ValueError:
            raise DomainError(f"unknown Bell state {label!r}; expected one of phi+, phi-, psi+, psi-") from None


_BELL_AMPLITUDES = {
    BellKind.PHI_PLUS: (_S, 0.0, 0.0, _S),
    BellKind.PHI_MINUS: (_S, 0.0, 0.0, -_S),
    BellKind.PSI_PLUS: (0.0, _S, _S, 0.0),
    BellKind.PSI_MINUS: (0.0, _S, -_S, 0.0),
}


@dataclass(frozen=True, eq=False)
class TwoQubitState:
    amplitudes: np.ndarray
    momenta: tuple = field(default=None)

    def __post_init__(self):
        a = np.array(self.amplitudes, dtype=complex)
        if a.shape != (4,):
            raise DomainError(f"two-qubit state needs 4 amplitudes, got shape {a.shape}")
        n = np.linalg.norm(a)
        if abs(n - 1.0) > DEFAULT.consistency:
            raise DomainError(f"state is not normalized (|psi| = {n!r})")
        a.setflags(write=False)
        object.__setattr__(self, "amplitudes", a)

    def overlap(self, other):
        """<self|other>."""
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def distance(self, other):
        """Largest amplitude-wise deviation, phase sensitive."""
        return float(np.max(np.abs(self.amplitudes - other.amplitudes)))


def is_unitary(u, tol=DEFAULT.consistency):
    u = np.asarray(u)
    return u.shape == (2, 2) and np.max(np.abs(u.conj().T @ u - IDENTITY2)) <= tol


def su2_from_rotation(r):
    """Spin-1/2 representation exp(-i angle n.sigma / 2) of a rotation."""
    if not isinstance(r, WignerRotation):
        raise TypeError("su2_from_rotation expects a WignerRotation")
    nx, ny, nz = r.axis
    h = 0.5 * r.angle
    return np.cos(h) * IDENTITY2 - 1j * np.sin(h) * (nx * SIGMA_X + ny * SIGMA_Y + nz * SIGMA_Z)


def wigner_pair(omega):
    """(D_A, D_B) for the pair moving along +z and -z: rotations by +omega and -omega about y."""
    return (
        su2_from_rotation(WignerRotation(Y_HAT, omega)),
        su2_from_rotation(WignerRotation(Y_HAT, -omega)),
    )


def parity(p):
    """P(t, x) = (t, -x)."""
    a = as_array(p)
    return FourVector(a[0], -a[1], -a[2], -a[3])


def bell_state(kind, p=None, pp=None):
    kind = BellKind.parse(kind)
    momenta = None if p is None else (p, pp)
    return TwoQubitState(np.array(_BELL_AMPLITUDES[kind]), momenta)


def boost_state(s, dA, dB, boost=None):
    """Apply D_A (x) D_B to the spin amplitudes.

    If ``boost`` (a 4x4 Lorentz matrix) is given and the state carries
    momentum labels, the labels are mapped to (boost p, boost Pp).
    """
    for name, d in (("dA", dA), ("dB", dB)):
        if not is_unitary(d):
            raise DomainError(f"{name} is not unitary")
    amps = np.kron(dA, dB) @ s.amplitudes
    momenta = s.momenta
    if boost is not None and momenta is not None:
        momenta = tuple(FourVector.from_array(boost @ as_array(q)) for q in momenta)
    return TwoQubitState(amps, momenta)


def boosted_bell_analytic(kind, omega, momenta=None):
    """Bell state after a boost producing the Wigner angle ``omega``, in closed form.

    phi+ and psi- mix under a rotation by omega; phi- and psi+ are fixed.
    """
    kind = BellKind.parse(kind)
    c, s = np.cos(omega), np.sin(omega)
    phi_p = np.array(_BELL_AMPLITUDES[BellKind.PHI_PLUS])
    psi_m = np.array(_BELL_AMPLITUDES[BellKind.PSI_MINUS])
    if kind is BellKind.PHI_PLUS:
        amps = c * phi_p - s * psi_m
    elif kind is BellKind.PSI_MINUS:
        amps = s * phi_p + c * psi_m
    else:
        amps = np.array(_BELL_AMPLITUDES[kind])
    return TwoQubitState(amps, momenta)


def boosted_bell_numeric(kind, omega):
    """Same state as :func:`boosted_bell_analytic`, built by applying the spinor pair."""
    dA, dB = wigner_pair(omega)
    return boost_state(bell_state(kind), dA, dB)
