"""Lorentz-covariant Bell/CHSH analysis for pairs of massive spin-1/2 particles."""

from .chsh import (
    ChshReport,
    ChshSetting,
    ObservableKind,
    canonical_axes,
    chsh_in_frame,
    chsh_value,
    critical_beta,
    czachor_report,
    frame_omega,
    horodecki_max,
    optimize_axes,
)
from .config import DEFAULT, Tolerances
from .errors import ConvergenceError, DomainError, InconsistencyError, NoCrossingError, RelbellError
from .lorentz import (
    BoostParams,
    FourVector,
    ParticleKinematics,
    WignerRotation,
    boost_matrix,
    extract_rotation,
    little_group_element,
    standard_boost,
    wigner_angle_closed_form,
    wigner_rotation,
)
from .observables import (
    TSIRELSON,
    MeasurementAxis,
    correlation_closed_form,
    correlation_matrix_of,
    correlation_numeric,
    czachor_chsh,
    observable_matrix,
    rotate_axis_a,
    rotate_axis_b,
)
from .spinstate import (
    BellKind,
    TwoQubitState,
    bell_state,
    boost_state,
    boosted_bell_analytic,
    parity,
    su2_from_rotation,
)

__version__ = "0.1.0"
