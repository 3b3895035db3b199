"""Numerical tolerances shared by the library, the oracles and the CLI."""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    # exact-by-construction quantities (norms, unitarity, isometry)
    construction: float = 1e-12
    # internal consistency checks that raise when violated
    consistency: float = 1e-9
    # imaginary part allowed on a Hermitian expectation value
    imag_residual: float = 1e-9
    # oracle comparisons
    wigner_angle: float = 1e-10
    boosted_state: float = 1e-12
    expectation: float = 1e-10

    def with_oracle_tolerance(self, tol):
        return replace(self, wigner_angle=tol, boosted_state=tol, expectation=tol)


DEFAULT = Tolerances()
