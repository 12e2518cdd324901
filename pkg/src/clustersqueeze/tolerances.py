"""Central tolerance configuration.

Residual-style post-conditions throughout the library are checked against the
fields of a single :class:`Tolerances` record so that matrix-exponential
accuracy, algebraic identities and cross-path comparisons can be tuned
independently but never drift apart between modules.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    #: relative residual for algebraic identities (unitarity, symmetry, ...)
    rtol: float = 1e-9
    #: max-entry agreement between the closed-form and brute-force covariance
    oracle: float = 1e-8
    #: sigma_min / sigma_max below which a matrix counts as singular
    singular: float = 1e-10
    #: largest tolerated asymmetry of a raw adjacency input
    input_asymmetry: float = 1e-12
    #: relative symmetry residual required of an interaction matrix
    interaction_symmetry: float = 1e-10
    #: sigma_min at which a phase vector is accepted during the search
    phase_accept: float = 1e-6
    #: smallest sigma_min the search may fall back to before giving up
    phase_floor: float = 1e-8
    #: sigma_min required of the inverse relation when phases are supplied
    regular_min: float = 1e-8
    #: imaginary residual allowed in a recovered adjacency matrix
    realness: float = 1e-8
    #: eigenvalue gap below which spectra are treated as degenerate
    degeneracy: float = 1e-8
    #: relative eigenvalue floor for positive definiteness
    positive: float = 1e-12
    #: residual of O @ O.T - 1 allowed for a real orthogonal seed
    orthogonal: float = 1e-12
    #: reject z * max(eig P) beyond this (cosh overflows double precision)
    z_cap: float = 30.0

    def with_rtol(self, rtol: float) -> "Tolerances":
        """Copy of the record with the algebraic tolerance replaced."""
        return replace(self, rtol=float(rtol))


DEFAULT_TOLERANCES = Tolerances()
