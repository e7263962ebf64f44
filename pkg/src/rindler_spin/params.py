"""Physical constants and the dimensionless operating point.

Everything internal runs in Gaussian-cgs units (erg, cm, s, G, statC,
statV/cm); the magnetic-moment normalization of the field correlators only
closes in this system.  Downstream modules work in dimensionless form: the
acceleration enters through

    alpha = a * hbar / (c * Delta),

rates are quoted in units of the zero-acceleration spontaneous flip rate
gamma0 = (8/3) mu^2 Delta^3 / (hbar^4 c^3), and times in units of 1/gamma0.
This module owns the conversions between that dimensionless core and
physical units.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class PhysicalConstants:
    """Gaussian-cgs constant snapshot (CODATA 2018).

    ``electron_charge`` is the positive elementary charge; the electron's
    signed charge is ``-electron_charge``.
    """

    hbar: float = 1.054571817e-27          # erg s
    c: float = 2.99792458e10               # cm/s (exact)
    electron_charge: float = 4.80320471257e-10  # statC
    electron_mass: float = 9.1093837015e-28     # g
    bohr_magneton: float = 9.2740100783e-21     # erg/G
    boltzmann: float = 1.380649e-16        # erg/K (exact)

    def __post_init__(self):
        for name in ("hbar", "c", "electron_charge", "electron_mass",
                     "bohr_magneton", "boltzmann"):
            if getattr(self, name) <= 0:
                raise DomainError(f"{name} must be strictly positive")


CODATA = PhysicalConstants()


@dataclass(frozen=True)
class OperatingPoint:
    """One physical configuration: acceleration, gap, moment, and alpha.

    The fields must be mutually consistent, alpha * c * gap == accel * hbar
    to 1e-12 relative; use :meth:`from_physical` to build one safely.
    """

    alpha: float     # dimensionless
    gap: float       # erg
    mu: float        # erg/G
    accel: float     # cm/s^2
    constants: PhysicalConstants = CODATA

    def __post_init__(self):
        if self.alpha < 0:
            raise DomainError("alpha must be nonnegative")
        if self.gap <= 0 or self.mu <= 0:
            raise DomainError("gap and mu must be strictly positive")
        lhs = self.alpha * self.constants.c * self.gap
        rhs = self.accel * self.constants.hbar
        scale = max(abs(lhs), abs(rhs), 1e-300)
        if abs(lhs - rhs) > 1e-12 * scale:
            raise DomainError(
                "inconsistent operating point: alpha*c*gap != accel*hbar "
                f"(relative mismatch {abs(lhs - rhs) / scale:.3e})")

    @classmethod
    def from_physical(cls, accel, gap, mu, constants=CODATA):
        return cls(alpha=alpha_of(accel, gap, constants), gap=gap, mu=mu,
                   accel=accel, constants=constants)

    @property
    def gamma0(self):
        """Spontaneous flip rate in 1/s for this operating point."""
        return gamma0(self.mu, self.gap, self.constants)


def alpha_of(accel, gap, constants=CODATA):
    """Dimensionless acceleration alpha = a*hbar/(c*Delta).

    ``accel`` in cm/s^2 (nonnegative), ``gap`` in erg (positive).
    """
    if gap <= 0:
        raise DomainError("gap must be strictly positive")
    if accel < 0:
        raise DomainError("accel must be nonnegative")
    return accel * constants.hbar / (constants.c * gap)


def energy_gap(mu, b_z):
    """Zeeman gap Delta = 2*mu*B_z (erg) of a moment mu (erg/G) in B_z (G)."""
    if mu <= 0 or b_z <= 0:
        raise DomainError("mu and b_z must be strictly positive")
    return 2.0 * mu * b_z


def acceleration_from_field(e_z, constants=CODATA):
    """Rest-frame acceleration of an electron in an axial electric field.

    With the electron's signed charge -e, a = -(q/m) E_z = +(e/m) E_z;
    ``e_z`` in statV/cm, result in cm/s^2.
    """
    return constants.electron_charge / constants.electron_mass * e_z


def gamma0(mu, gap, constants=CODATA):
    """Zero-acceleration spontaneous flip rate (8/3) mu^2 Delta^3 / (hbar^4 c^3).

    Returns 1/s; this is the rate unit of every dimensionless module.
    """
    if mu <= 0 or gap <= 0:
        raise DomainError("mu and gap must be strictly positive")
    return (8.0 / 3.0) * mu**2 * gap**3 / (constants.hbar**4 * constants.c**3)


def unruh_temperature(accel, constants=CODATA):
    """Temperature hbar*a/(2*pi*c*k) of the thermal bath seen at acceleration a.

    ``accel`` in cm/s^2 (nonnegative), result in K.
    """
    if accel < 0:
        raise DomainError("accel must be nonnegative")
    return constants.hbar * accel / (2.0 * math.pi * constants.c * constants.boltzmann)
