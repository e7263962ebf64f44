"""Concurrence, relaxation times, and disentanglement times.

The two-qubit concurrence is C = max{l1 - l2 - l3 - l4, 0} where the l_i
are the nonnegative square roots of the eigenvalues of
M = rho (sy x sy) rho* (sy x sy), sorted descending.  For real-valued
density matrices the l_i are equivalently the absolute eigenvalues of the
single product rho (sy x sy).

For the accelerated-plus-spectator pair initialized in a Bell state the
coefficient solutions give the closed form

    C(alpha, tau) = max{ exp(-tau G2)
                         - (1 - exp(-tau G1)) sech(pi/alpha) / 2, 0 }

with G1 = (1+alpha^2) coth(pi/alpha) and G2 = (G1 + alpha^3/pi)/2 the
inverse relaxation and dephasing times in gamma0 units.  The proper time
tau0 at which C reaches zero solves exp(-tau0 G2) = (1 - exp(-tau0 G1))
sech(pi/alpha)/2; at large alpha it collapses onto pi*ln(3)/alpha^3
(gamma0 units), i.e. an inverse-cube law in the acceleration, and the
lab-frame time t0 = (c/2a) exp[(3 pi ln3 / 8) hbar c^5 / (mu^2 a^2)] is
exponentially longer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .dynamics import DensityMatrix, PAULI2
from .errors import DomainError, NumericError, ValidationError
from .linalg4 import characteristic_roots, jacobi_hermitian

_SPIN_FLIP = PAULI2[2][2].real  # sy x sy is real symmetric

EIG_CLAMP = -1e-10       # eigenvalue noise floor treated as zero
IMAG_EIG_TOL = 1e-8      # larger imaginary residuals signal an invalid state


@dataclass(frozen=True)
class RelaxationTimes:
    """T1 (population) and T2 (coherence) times in gamma0^-1 units."""

    t1: float
    t2: float

    @property
    def gamma1(self):
        return 1.0 / self.t1

    @property
    def gamma2(self):
        return 1.0 / self.t2


@dataclass(frozen=True)
class ConcurrenceCurve:
    """Sampled concurrence decay at fixed alpha, with the zero crossing."""

    alpha: float
    samples: tuple      # ((tau, c), ...) in gamma0^-1 units
    tau0: Optional[float] = None


class LabDisentanglement(NamedTuple):
    """Lab-frame disentanglement time with an overflow-safe log companion.

    ``t0`` saturates to inf when the exponential overflows; ``log_t0``
    is ln(t0) in seconds, always finite.
    """

    t0: float
    log_t0: float


def _wootters_lambdas(rho: DensityMatrix):
    """Nonnegative square roots of the spectrum of rho (sy x sy) rho* (sy x sy).

    Factor rho = Phi Phi^dagger through its Jacobi eigendecomposition; the
    lambdas are then the singular values of the complex symmetric matrix
    W = Phi^T (sy x sy) Phi, read off a second Hermitian Jacobi pass on
    W^dagger W.  This keeps small lambdas accurate where the quartic of the
    squared product would drown them in roundoff.
    """
    w, v = jacobi_hermitian(rho.m)
    low = float(np.min(w))
    if low < EIG_CLAMP:
        raise ValidationError(f"density matrix has eigenvalue {low:.3e} < {EIG_CLAMP}")
    phi = v * np.sqrt(np.clip(w, 0.0, None))
    sym = phi.T @ _SPIN_FLIP @ phi
    sq = jacobi_hermitian(sym.conj().T @ sym, vectors=False)
    return np.sort(np.sqrt(np.clip(sq, 0.0, None)))[::-1]


def concurrence(rho: DensityMatrix) -> float:
    """Wootters concurrence of a (validated) two-qubit density matrix."""
    rho.validate()
    lams = _wootters_lambdas(rho)
    return float(max(0.0, lams[0] - lams[1] - lams[2] - lams[3]))


def concurrence_real(rho: DensityMatrix) -> float:
    """Concurrence specialization for real density matrices.

    Requires every entry real to 1e-12.  The lambdas are the absolute
    eigenvalues of the single (non-symmetric) product rho (sy x sy),
    computed here from its characteristic quartic with Newton polishing.
    An imaginary eigenvalue residual above 1e-8 signals an invalid state.
    """
    if np.max(np.abs(rho.m.imag)) >= 1e-12:
        raise ValidationError("concurrence_real requires a real density matrix")
    rho.validate()
    product = rho.m.real @ _SPIN_FLIP
    roots = characteristic_roots(product)
    scale = max(1.0, float(np.max(np.abs(roots))))
    worst_imag = float(np.max(np.abs(roots.imag)))
    if worst_imag > IMAG_EIG_TOL * scale:
        raise NumericError(
            f"complex eigenvalue residual {worst_imag:.3e} (invalid state?)",
            residual=worst_imag)
    lams = np.sort(np.abs(roots.real))[::-1]
    return float(max(0.0, lams[0] - lams[1] - lams[2] - lams[3]))


def relaxation_times(alpha) -> RelaxationTimes:
    """T1 and T2 in gamma0^-1 units at dimensionless acceleration alpha.

    1/T1 = (1+alpha^2) coth(pi/alpha) and 1/T2 = (1/T1 + alpha^3/pi)/2.
    Nonpositive alpha returns the zero-acceleration limit T1=1, T2=2
    (spontaneous emission only; the T2 = 2 T1 bound saturates).
    """
    if alpha <= 0:
        return RelaxationTimes(t1=1.0, t2=2.0)
    g1 = (1.0 + alpha * alpha) / math.tanh(math.pi / alpha)
    g2 = 0.5 * (g1 + alpha**3 / math.pi)
    return RelaxationTimes(t1=1.0 / g1, t2=1.0 / g2)


def concurrence_closed(alpha, tau) -> float:
    """Closed-form concurrence of the evolved Bell pair at (alpha, tau)."""
    if alpha <= 0:
        raise DomainError("concurrence_closed requires alpha > 0")
    if tau < 0:
        raise DomainError("tau must be nonnegative")
    times = relaxation_times(alpha)
    sech = 1.0 / math.cosh(math.pi / alpha)
    value = math.exp(-tau * times.gamma2) - 0.5 * (1.0 - math.exp(-tau * times.gamma1)) * sech
    return max(value, 0.0)


def _crossing_function(alpha):
    times = relaxation_times(alpha)
    sech = 1.0 / math.cosh(math.pi / alpha)

    def f(tau):
        return math.exp(-tau * times.gamma2) - 0.5 * (1.0 - math.exp(-tau * times.gamma1)) * sech

    return f, times


def disentanglement_time(alpha) -> float:
    """Proper time tau0 (gamma0^-1 units) at which the Bell pair's concurrence hits zero.

    The crossing function is strictly decreasing from f(0) = 1, so the
    positive root is unique; found by bracket expansion plus bisection to
    1e-12 relative.
    """
    if alpha <= 0:
        raise DomainError("disentanglement_time requires alpha > 0")
    f, times = _crossing_function(alpha)
    lo, hi = 0.0, 10.0 * math.log(3.0) * times.t2
    expansions = 0
    while f(hi) > 0.0:
        hi *= 2.0
        expansions += 1
        if expansions > 200:
            raise NumericError(f"could not bracket the concurrence zero for alpha={alpha}")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(mid) > 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-12 * hi:
            break
    return 0.5 * (lo + hi)


def concurrence_curve(alpha, tau_grid: Sequence[float]) -> ConcurrenceCurve:
    """Closed-form concurrence samples at fixed alpha with tau0 attached."""
    samples = tuple((float(t), concurrence_closed(alpha, t)) for t in tau_grid)
    return ConcurrenceCurve(alpha=alpha, samples=samples,
                            tau0=disentanglement_time(alpha))


def tau0_asymptotic(accel, constants, mu) -> float:
    """High-temperature disentanglement time (3 pi ln3 / 8) hbar c^6 / (mu^2 a^3), s.

    In gamma0 units this is pi*ln(3)/alpha^3, the inverse-cube law valid
    for alpha >> 1 with relative error O(alpha^-2).
    """
    if accel <= 0:
        raise DomainError("tau0_asymptotic requires accel > 0")
    prefactor = 3.0 * math.pi * math.log(3.0) / 8.0
    return prefactor * constants.hbar * constants.c**6 / (mu**2 * accel**3)


def lab_exponent_constant(constants, mu) -> float:
    """The acceleration-free part of the lab-frame exponent, (3 pi ln3/8) hbar c^5 / mu^2.

    Returned in cm^2/s^4; dividing by a^2 gives the dimensionless exponent
    of t0.  For the electron (mu = Bohr magneton) this is the constant the
    log of the disentanglement time is controlled by, about 3.8e61 m^2/s^4.
    """
    return 3.0 * math.pi * math.log(3.0) / 8.0 * constants.hbar * constants.c**5 / mu**2


def t0_lab(accel, constants, mu) -> LabDisentanglement:
    """Lab-frame disentanglement time t0 = (c/2a) exp[K/a^2], overflow-safe.

    Returns the pair (t0, log t0); t0 is inf when the exponent overflows,
    log t0 = ln(c/2a) + K/a^2 is exact either way.
    """
    if accel <= 0:
        raise DomainError("t0_lab requires accel > 0")
    exponent = lab_exponent_constant(constants, mu) / accel / accel  # no a**2 overflow
    log_t0 = math.log(constants.c / (2.0 * accel)) + exponent
    try:
        t0 = constants.c / (2.0 * accel) * math.exp(exponent)
    except OverflowError:
        t0 = math.inf
    return LabDisentanglement(t0=t0, log_t0=log_t0)
