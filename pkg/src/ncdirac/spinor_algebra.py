"""Pauli and Dirac matrices in the standard representation, plus identity checks.

Conventions used across the package:

* spin is always the slow (outer) Kronecker factor: a spinor-orbital operator
  is ``np.kron(spin_matrix, orbital_matrix)``;
* residuals are reported as max-abs entries so tolerances are dimension-free.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "SpinorRep",
    "standard_rep",
    "clifford_residual",
    "sigma_dot",
    "alpha_dot",
    "pauli_identity_residual",
]

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)

_ZERO2 = np.zeros((2, 2), dtype=complex)


@dataclass(frozen=True)
class SpinorRep:
    """Spin-1/2 matrices: three Pauli sigma, three Dirac alpha, and beta."""

    sigma: tuple[np.ndarray, np.ndarray, np.ndarray]
    alpha: tuple[np.ndarray, np.ndarray, np.ndarray]
    beta: np.ndarray


def standard_rep() -> SpinorRep:
    """Dirac matrices with ``alpha_i = offdiag(sigma_i, sigma_i)`` and ``beta = diag(I, -I)``."""
    sigma = (SIGMA_X, SIGMA_Y, SIGMA_Z)
    alpha = tuple(np.block([[_ZERO2, s], [s, _ZERO2]]) for s in sigma)
    beta = np.diag([1.0, 1.0, -1.0, -1.0]).astype(complex)
    return SpinorRep(sigma=sigma, alpha=alpha, beta=beta)


def max_abs(m: np.ndarray) -> float:
    return float(np.abs(m).max()) if m.size else 0.0


def anticommutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b + b @ a


def clifford_residual(rep: SpinorRep) -> float:
    """Max-abs deviation from {a_i,a_j}=2 delta_ij, {a_i,beta}=0, a_i^2 = beta^2 = I.

    Exactly 0 for the standard representation (entries are 0, +-1, +-i, so
    every product is computed without rounding).
    """
    eye = np.eye(4, dtype=complex)
    mats = list(rep.alpha)
    residual = 0.0
    for i, ai in enumerate(mats):
        for j, aj in enumerate(mats):
            target = 2.0 * eye if i == j else np.zeros_like(eye)
            residual = max(residual, max_abs(anticommutator(ai, aj) - target))
        residual = max(residual, max_abs(anticommutator(ai, rep.beta)))
    residual = max(residual, max_abs(rep.beta @ rep.beta - eye))
    return residual


def _promote(components, dim: int | None):
    """Turn a mixed scalar/matrix 3-vector into three dim x dim matrices (or scalars)."""
    mats = [np.asarray(v) for v in components]
    sizes = {m.shape[0] for m in mats if m.ndim == 2}
    if len(sizes) > 1:
        raise ValueError(f"operator components disagree in dimension: {sorted(sizes)}")
    if not sizes:
        if dim is None:
            return mats, None  # all scalars
        n = dim
    else:
        n = sizes.pop()
    out = []
    for m in mats:
        if m.ndim == 0:
            out.append(complex(m) * np.eye(n, dtype=complex))
        elif m.shape != (n, n):
            raise ValueError(f"component shape {m.shape} is not ({n}, {n})")
        else:
            out.append(m.astype(complex))
    return out, n


def _spin_dot(spin_mats, v) -> np.ndarray:
    comps, n = _promote(v, None)
    if n is None:
        return sum(s * complex(c) for s, c in zip(spin_mats, comps))
    return sum(np.kron(s, c) for s, c in zip(spin_mats, comps))


def sigma_dot(rep: SpinorRep, v) -> np.ndarray:
    """sigma . v for a 3-vector of scalars (-> 2x2) or operators (-> 2N x 2N, spin slow)."""
    return _spin_dot(rep.sigma, v)


def alpha_dot(rep: SpinorRep, v) -> np.ndarray:
    """alpha . v, same promotion rules as :func:`sigma_dot` (-> 4x4 or 4N x 4N)."""
    return _spin_dot(rep.alpha, v)


def _scalar_cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def pauli_identity_residual(rep: SpinorRep, a, b, *, cross=None, projector=None) -> float:
    """Residual of (sigma.a)(sigma.b) = a.b + i sigma.(a x b).

    ``a`` and ``b`` are 3-vectors of scalars or of same-dimension operators.
    For operators the ordered cross product ``(a x b)_k = eps_kij a_i b_j`` is
    used, which makes the identity exact even in a truncated basis.

    ``cross`` overrides the computed ``a x b`` with an externally supplied
    3-vector — e.g. the c-number magnetic-field form ``i hbar (e/c) B`` of the
    kinetic-momentum commutator, in which case the residual measures how well
    the truncated basis reproduces that closed form and ``projector`` (an
    orbital-space 0/1 diagonal) should restrict the comparison to interior
    states.
    """
    comps_a, na = _promote(a, None)
    comps_b, nb = _promote(b, None)
    if (na is None) != (nb is None) or (na is not None and na != nb):
        # promote the scalar side up to the operator side's dimension
        n = na if na is not None else nb
        comps_a, _ = _promote(comps_a, n)
        comps_b, _ = _promote(comps_b, n)
        na = nb = n
    lhs = _spin_dot(rep.sigma, comps_a) @ _spin_dot(rep.sigma, comps_b)
    if na is None:
        sa = [complex(x) for x in comps_a]
        sb = [complex(y) for y in comps_b]
        dot = sum(x * y for x, y in zip(sa, sb))
        cr = cross if cross is not None else _scalar_cross(sa, sb)
        rhs = dot * np.eye(2, dtype=complex) + 1j * _spin_dot(rep.sigma, cr)
        return max_abs(lhs - rhs)
    dot = sum(x @ y for x, y in zip(comps_a, comps_b))
    cr = cross if cross is not None else tuple(
        comps_a[i] @ comps_b[j] - comps_a[j] @ comps_b[i]
        for i, j in ((1, 2), (2, 0), (0, 1))
    )
    cr_mats, _ = _promote(cr, na)
    rhs = np.kron(np.eye(2, dtype=complex), dot) + 1j * _spin_dot(rep.sigma, cr_mats)
    diff = lhs - rhs
    if projector is not None:
        p2 = np.kron(np.eye(2, dtype=complex), projector)
        diff = p2 @ diff @ p2
    return max_abs(diff)
