"""Self-contained dense linear algebra for the 4x4 problems in this package.

Two primitives live here so the physics modules need no external
eigensolver:

* cyclic complex Jacobi sweeps for Hermitian eigenproblems (used for
  density-matrix positivity checks and for the concurrence factorization);
* a closed-form real-quartic solver (resolvent cubic, factorization into
  two quadratics, guarded Newton polish) for characteristic roots of real
  4x4 matrices.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .errors import NumericError


def jacobi_hermitian(matrix, tol=1e-13, max_sweeps=100, vectors=True):
    """Eigenvalues (and optionally eigenvectors) of a Hermitian matrix.

    Cyclic Jacobi with complex plane rotations; sweeps until every
    off-diagonal element is below ``tol`` times the largest input
    magnitude.  Returns (values, vectors) with ``matrix ~ V diag(w) V^H``;
    values are unsorted.
    """
    a = np.array(matrix, dtype=complex)
    n = a.shape[0]
    v = np.eye(n, dtype=complex) if vectors else None
    scale = max(float(np.max(np.abs(a))), 1e-300)

    for _ in range(max_sweeps):
        off = max(abs(a[p, q]) for p in range(n - 1) for q in range(p + 1, n))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= tol * scale * 1e-3:
                    continue
                phase = apq / abs(apq)
                theta = 0.5 * math.atan2(2.0 * abs(apq), (a[p, p] - a[q, q]).real)
                c, s = math.cos(theta), math.sin(theta)
                rot = np.eye(n, dtype=complex)
                rot[p, p] = c
                rot[p, q] = -s * phase
                rot[q, p] = s * np.conj(phase)
                rot[q, q] = c
                a = rot.conj().T @ a @ rot
                if vectors:
                    v = v @ rot
        a = (a + a.conj().T) / 2.0  # suppress rotation roundoff drift
    else:
        raise NumericError("Jacobi sweeps did not converge", residual=float(off))

    w = a.diagonal().real.copy()
    return (w, v) if vectors else w


def hermitian_eigenvalues(matrix, tol=1e-13):
    """Sorted (ascending) eigenvalues of a Hermitian matrix via Jacobi sweeps."""
    w = jacobi_hermitian(matrix, tol=tol, vectors=False)
    return np.sort(w)


def _largest_real_cubic_root(b, c, d):
    """Largest real root of x^3 + b x^2 + c x + d."""
    p = c - b * b / 3.0
    q = 2.0 * b**3 / 27.0 - b * c / 3.0 + d
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3
    if disc >= 0.0:
        s = math.sqrt(disc)
        x = np.cbrt(-q / 2.0 + s) + np.cbrt(-q / 2.0 - s)
    else:
        rho = math.sqrt(-(p**3) / 27.0)
        arg = min(1.0, max(-1.0, -q / (2.0 * rho)))
        x = 2.0 * math.sqrt(-p / 3.0) * math.cos(math.acos(arg) / 3.0)
    return float(x) - b / 3.0


def _quadratic_roots(b, c):
    """Roots of x^2 + b x + c, stable against cancellation."""
    disc = b * b - 4.0 * c
    if disc >= 0.0:
        root = math.sqrt(disc)
        if b >= 0.0:
            r1 = (-b - root) / 2.0
        else:
            r1 = (-b + root) / 2.0
        r2 = c / r1 if r1 != 0.0 else -b - r1
        return complex(r1), complex(r2)
    root = cmath.sqrt(disc)
    return (-b + root) / 2.0, (-b - root) / 2.0


def quartic_roots(a3, a2, a1, a0):
    """Roots of x^4 + a3 x^3 + a2 x^2 + a1 x + a0 with real coefficients.

    Factors the depressed quartic into two real quadratics through the
    resolvent cubic; near-double roots stay paired inside one quadratic,
    which keeps their sum and product well conditioned.
    """
    shift = a3 / 4.0
    p = a2 - 3.0 * a3 * a3 / 8.0
    q = a1 - a3 * a2 / 2.0 + a3**3 / 8.0
    r = a0 - a3 * a1 / 4.0 + a3 * a3 * a2 / 16.0 - 3.0 * a3**4 / 256.0

    coeff_scale = max(1.0, abs(p), abs(r)) ** 0.5
    if abs(q) <= 1e-14 * coeff_scale**3:
        # biquadratic: y^4 + p y^2 + r
        roots = []
        for z in _quadratic_roots(p, r):
            w = cmath.sqrt(z)
            roots.extend((w, -w))
    else:
        t = max(_largest_real_cubic_root(2.0 * p, p * p - 4.0 * r, -q * q), 0.0)
        s = math.sqrt(t)
        if s == 0.0:
            roots = []
            for z in _quadratic_roots(p, r):
                w = cmath.sqrt(z)
                roots.extend((w, -w))
        else:
            u = (p + t - q / s) / 2.0
            v = (p + t + q / s) / 2.0
            roots = list(_quadratic_roots(s, u)) + list(_quadratic_roots(-s, v))

    return np.array([z - shift for z in roots], dtype=complex)


def _polish_root(coeffs, z, iters=3):
    """Guarded Newton refinement; keeps a step only if it shrinks |p(z)|."""
    a3, a2, a1, a0 = coeffs

    def val(x):
        return (((x + a3) * x + a2) * x + a1) * x + a0

    pz = val(z)
    for _ in range(iters):
        dz = ((4.0 * z + 3.0 * a3) * z + 2.0 * a2) * z + a1
        if dz == 0:
            break
        cand = z - pz / dz
        pc = val(cand)
        if abs(pc) >= abs(pz):
            break
        z, pz = cand, pc
    return z


def characteristic_roots(matrix, polish=True):
    """Eigenvalues of a real 4x4 matrix via its characteristic quartic.

    The monic characteristic polynomial is assembled from power-sum traces
    (Newton's identities), solved in closed form, then Newton-polished.
    Suitable for well-scaled spectra; clustered tiny eigenvalues of badly
    scaled products lose absolute accuracy with any polynomial route.
    """
    m = np.asarray(matrix, dtype=float)
    if m.shape != (4, 4):
        raise ValueError("expected a 4x4 matrix")
    m2 = m @ m
    m3 = m2 @ m
    p1 = float(np.trace(m))
    p2 = float(np.trace(m2))
    p3 = float(np.trace(m3))
    p4 = float(np.trace(m3 @ m))
    e1 = p1
    e2 = (e1 * p1 - p2) / 2.0
    e3 = (e2 * p1 - e1 * p2 + p3) / 3.0
    e4 = (e3 * p1 - e2 * p2 + e1 * p3 - p4) / 4.0

    coeffs = (-e1, e2, -e3, e4)
    roots = quartic_roots(*coeffs)
    if polish:
        roots = np.array([_polish_root(coeffs, z) for z in roots])
    return roots
