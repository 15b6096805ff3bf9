"""Dirac and Pauli Hamiltonians on the truncated oscillator basis.

Builders come in commutative/noncommutative pairs:

================  ============================================================
``dirac_h``       H = c alpha.Pi + e A0 + beta m0 c^2         (4-spinor space)
``nc_dirac_h``    adds (c/hbar) eta Q_eta + (e/hbar) theta Q_theta
``pauli_h_full``  H = Pi^2/2m0 - (e hbar/2 m0 c) sigma.B + e A0   (2-spinor)
``pauli_h_linear``drops the diamagnetic A^2 term:
                  H = p^2/2m0 - (e B/2 m0 c)(L_z + 2 S_z) + e A0
``nc_pauli_h``    multiplies the linear kinetic part by the geometric series
                  of the theta kinetic factor Theta_theta (see below)
``rest_frame_h``  beta m0 c^2 + (c/hbar) eta Q_eta
================  ============================================================

The noncommutative corrections are carried by two Hermitian operators:

* ``Q_eta = alpha_x y - alpha_y x`` — the momentum-space deformation couples
  like a linear vector potential and survives in the rest frame;
* ``Q_theta = d/dx(alpha.A - A0) p_y - d/dy(alpha.A - A0) p_x`` — the
  position-space deformation enters through first derivatives of the (affine)
  potentials.  A0 is promoted to A0 * identity in spinor space so the
  difference is well-typed.

Both are returned *structurally*, i.e. without their theta/eta prefactors;
assembly multiplies the scalars in.

In the two-component (Pauli) reduction the 4x4 alpha matrices inside Q_theta
have no unique image.  Two conventions are implemented and selectable:

* ``"sigma"`` (default): substitute alpha -> sigma, consistent with the
  large-component projection that produces the Pauli equation;
* ``"upper-block"``: take the literal upper-left 2x2 block of each 4x4
  coefficient, in which the block-off-diagonal alpha content drops out and
  only the A0 gradient survives.

The nonrelativistic kinetic factor 1/(2 m0 (1 - Theta_theta)) with
``Theta_theta = (e theta / 2 m0 hbar c^2) Q_theta`` is expanded as a
geometric (Maclaurin) series in ``nc_pauli_h``; each series term is
symmetrized, ``(Theta^j K + K Theta^j)/2``, because Theta_theta and the
kinetic operator do not commute and an unsymmetrized product would not be
Hermitian.  The closed-form inverse is available as ``nc_pauli_h_exact`` and
serves as the convergence oracle.  The constant rest-energy correction term
is ``2 m0 c^2 Theta_theta``, with the full c^2 required on dimensional
grounds: Theta_theta is dimensionless, so only a rest energy can multiply it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .phase_space import BasisSpec, NCParams, OperatorSet, build_canonical_ops
from .spinor_algebra import SpinorRep, standard_rep

__all__ = [
    "PhysParams",
    "EMPotential",
    "HamiltonianMatrix",
    "OperatorBundle",
    "SeriesDivergenceError",
    "kinetic_momentum",
    "a0_matrix",
    "dirac_h",
    "q_eta",
    "q_theta",
    "q_theta_pauli",
    "nc_dirac_h",
    "rest_frame_h",
    "rest_frame_spectrum",
    "pauli_h_full",
    "pauli_h_linear",
    "lz_matrix",
    "theta_kinetic_factor",
    "nc_pauli_h",
    "nc_pauli_h_exact",
    "operator_bundle",
    "herm_residual",
]

QTHETA_MODES = ("sigma", "upper-block")


class SeriesDivergenceError(ValueError):
    """Raised when the theta kinetic-factor series cannot converge (spectral radius >= 1)."""


@dataclass(frozen=True)
class PhysParams:
    """Rest mass, light speed, signed charge, and hbar (natural units by default)."""

    m0: float = 1.0
    c: float = 50.0
    e: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        for name in ("m0", "c", "hbar"):
            v = getattr(self, name)
            if not (v > 0 and math.isfinite(v)):
                raise ValueError(f"{name} must be positive and finite, got {v}")
        if not math.isfinite(self.e):
            raise ValueError(f"e must be finite, got {self.e}")

    @property
    def rest_energy(self) -> float:
        return self.m0 * self.c**2


@dataclass(frozen=True)
class EMPotential:
    """Affine electromagnetic potential: A_i = h_ij x_j, A0 = g.x.

    ``a_coeffs`` is the 2x2 real matrix h, ``a0_coeffs`` the pair g.  Only
    affine potentials are supported: they keep every derivative-coupling
    constant and make the first-order star truncation exact.
    """

    a_coeffs: tuple[tuple[float, float], tuple[float, float]] = ((0.0, 0.0), (0.0, 0.0))
    a0_coeffs: tuple[float, float] = (0.0, 0.0)
    descriptor: str = "zero"

    @classmethod
    def zero(cls) -> "EMPotential":
        return cls()

    @classmethod
    def symmetric_gauge(cls, b_field: float) -> "EMPotential":
        """Uniform B along z in symmetric gauge: A = (-B y/2, B x/2), A0 = 0."""
        return cls(
            a_coeffs=((0.0, -b_field / 2.0), (b_field / 2.0, 0.0)),
            a0_coeffs=(0.0, 0.0),
            descriptor=f"symmetric-gauge({b_field!r})",
        )

    @classmethod
    def linear(cls, a_coeffs, a0_coeffs=(0.0, 0.0)) -> "EMPotential":
        h = tuple(tuple(float(v) for v in row) for row in a_coeffs)
        g = tuple(float(v) for v in a0_coeffs)
        return cls(a_coeffs=h, a0_coeffs=g, descriptor=f"linear({h!r}, {g!r})")

    @property
    def b_field(self) -> float:
        """Constant magnetic field B_z = dA_y/dx - dA_x/dy."""
        return self.a_coeffs[1][0] - self.a_coeffs[0][1]


@dataclass(frozen=True)
class HamiltonianMatrix:
    """A built Hamiltonian plus the ingredients that produced it."""

    matrix: np.ndarray
    kind: str
    basis: BasisSpec
    phys: PhysParams
    potential: EMPotential | None = None
    nc: NCParams | None = None
    extra: dict = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class OperatorBundle:
    """The operator ingredients shared by the Hamiltonian builders.

    ``pi_x, pi_y, lz`` live on the orbital space; ``sz`` and ``theta_theta``
    on the 2-spinor space; ``q_eta`` and ``q_theta`` on the 4-spinor space.
    ``q_theta`` and ``theta_theta`` include the theta prefactor, so
    ``theta_theta = (e / 2 m0 hbar c^2) * q_theta``-with-alpha->sigma holds
    exactly.
    """

    pi_x: np.ndarray
    pi_y: np.ndarray
    lz: np.ndarray
    sz: np.ndarray
    q_eta: np.ndarray
    q_theta: np.ndarray
    theta_theta: np.ndarray


def herm_residual(m: np.ndarray) -> float:
    return float(np.abs(m - m.conj().T).max())


def _ops_for(basis: BasisSpec, phys: PhysParams, ops: OperatorSet | None) -> OperatorSet:
    if ops is None:
        return build_canonical_ops(basis, hbar=phys.hbar)
    if ops.basis != basis:
        raise ValueError("supplied OperatorSet was built for a different basis")
    return ops


def _spin_embed(spin: np.ndarray, orb_dim: int) -> np.ndarray:
    return np.kron(spin, np.eye(orb_dim))


def kinetic_momentum(ops: OperatorSet, pot: EMPotential, phys: PhysParams):
    """Pi_i = p_i - (e/c) A_i(x) as orbital-space matrices."""
    h = pot.a_coeffs
    g = phys.e / phys.c
    if phys.e == 0.0 or pot.descriptor == "zero":
        return ops.px, ops.py
    pi_x = ops.px - g * (h[0][0] * ops.x + h[0][1] * ops.y)
    pi_y = ops.py - g * (h[1][0] * ops.x + h[1][1] * ops.y)
    return pi_x, pi_y


def a0_matrix(ops: OperatorSet, pot: EMPotential) -> np.ndarray:
    """Scalar potential A0 = g_x x + g_y y as an orbital-space matrix."""
    gx, gy = pot.a0_coeffs
    return gx * ops.x + gy * ops.y


def lz_matrix(ops: OperatorSet) -> np.ndarray:
    """Orbital angular momentum L_z = x p_y - y p_x (length-scale independent)."""
    return ops.x @ ops.py - ops.y @ ops.px


# --------------------------------------------------------------------------
# Dirac family
# --------------------------------------------------------------------------

def dirac_h(basis: BasisSpec, pot: EMPotential, phys: PhysParams,
            rep: SpinorRep | None = None, ops: OperatorSet | None = None) -> HamiltonianMatrix:
    """Minimally coupled Dirac Hamiltonian c alpha.Pi + e A0 + beta m0 c^2.

    Acts on the 4-spinor (x) orbital space (dimension 4 n_max^2, spin slow).
    With A0 = 0 the spectrum is symmetric about zero: alpha_z anticommutes
    with alpha_x, alpha_y, and beta, so conjugation by alpha_z flips the sign
    of every term.
    """
    rep = rep or standard_rep()
    ops = _ops_for(basis, phys, ops)
    pi_x, pi_y = kinetic_momentum(ops, pot, phys)
    n = basis.dim
    h = phys.c * (np.kron(rep.alpha[0], pi_x) + np.kron(rep.alpha[1], pi_y))
    h = h + phys.rest_energy * _spin_embed(rep.beta, n)
    if pot.a0_coeffs != (0.0, 0.0):
        h = h + phys.e * np.kron(np.eye(4), a0_matrix(ops, pot))
    return HamiltonianMatrix(matrix=h, kind="dirac", basis=basis, phys=phys, potential=pot)


def q_eta(basis: BasisSpec, rep: SpinorRep | None = None,
          ops: OperatorSet | None = None, hbar: float = 1.0) -> np.ndarray:
    """Structural momentum-deformation operator Q_eta = alpha_x y - alpha_y x.

    The z-component of (alpha x position); the eta scalar multiplies in at
    assembly time.  Hermitian, block-off-diagonal in spinor space.
    """
    rep = rep or standard_rep()
    if ops is None:
        ops = build_canonical_ops(basis, hbar=hbar)
    return np.kron(rep.alpha[0], ops.y) - np.kron(rep.alpha[1], ops.x)


def _grad_coeffs(pot: EMPotential):
    """Constant gradients (d/dx, d/dy) of (A_x, A_y, A0) for an affine potential."""
    h = pot.a_coeffs
    gx, gy = pot.a0_coeffs
    return (h[0][0], h[1][0], gx), (h[0][1], h[1][1], gy)


def q_theta(basis: BasisSpec, pot: EMPotential, phys: PhysParams,
            rep: SpinorRep | None = None, ops: OperatorSet | None = None) -> np.ndarray:
    """Structural position-deformation operator on the 4-spinor space.

    Q_theta = d/dx(alpha.A - A0) p_y - d/dy(alpha.A - A0) p_x, with the
    gradients constant 4x4 matrices for affine potentials (A0 enters times the
    identity).  The theta scalar multiplies in at assembly time.
    """
    rep = rep or standard_rep()
    ops = _ops_for(basis, phys, ops)
    (dax_dx, day_dx, da0_dx), (dax_dy, day_dy, da0_dy) = _grad_coeffs(pot)
    eye4 = np.eye(4, dtype=complex)
    cx = dax_dx * rep.alpha[0] + day_dx * rep.alpha[1] - da0_dx * eye4
    cy = dax_dy * rep.alpha[0] + day_dy * rep.alpha[1] - da0_dy * eye4
    return np.kron(cx, ops.py) - np.kron(cy, ops.px)


def q_theta_pauli(basis: BasisSpec, pot: EMPotential, phys: PhysParams,
                  rep: SpinorRep | None = None, ops: OperatorSet | None = None,
                  mode: str = "sigma") -> np.ndarray:
    """Two-component reduction of :func:`q_theta` (see module docstring).

    mode "sigma": alpha -> sigma.  mode "upper-block": literal upper-left 2x2
    block of each gradient coefficient, which erases the alpha content.
    """
    if mode not in QTHETA_MODES:
        raise ValueError(f"qtheta mode must be one of {QTHETA_MODES}, got {mode!r}")
    rep = rep or standard_rep()
    ops = _ops_for(basis, phys, ops)
    (dax_dx, day_dx, da0_dx), (dax_dy, day_dy, da0_dy) = _grad_coeffs(pot)
    eye2 = np.eye(2, dtype=complex)
    if mode == "sigma":
        cx = dax_dx * rep.sigma[0] + day_dx * rep.sigma[1] - da0_dx * eye2
        cy = dax_dy * rep.sigma[0] + day_dy * rep.sigma[1] - da0_dy * eye2
    else:
        cx = -da0_dx * eye2
        cy = -da0_dy * eye2
    return np.kron(cx, ops.py) - np.kron(cy, ops.px)


def nc_dirac_h(basis: BasisSpec, pot: EMPotential, phys: PhysParams, nc: NCParams,
               rep: SpinorRep | None = None, ops: OperatorSet | None = None) -> HamiltonianMatrix:
    """Noncommutative Dirac Hamiltonian.

    H = c alpha.Pi + e A0 + beta m0 c^2
        + (c/hbar) eta Q_eta + (e/hbar) theta Q_theta.

    theta = eta = 0 returns the commutative matrix unchanged (entrywise).
    """
    rep = rep or standard_rep()
    ops = _ops_for(basis, phys, ops)
    base = dirac_h(basis, pot, phys, rep=rep, ops=ops)
    h = base.matrix
    if nc.eta != 0.0:
        h = h + (phys.c / phys.hbar) * nc.eta * q_eta(basis, rep=rep, ops=ops)
    if nc.theta != 0.0:
        h = h + (phys.e / phys.hbar) * nc.theta * q_theta(basis, pot, phys, rep=rep, ops=ops)
    return HamiltonianMatrix(matrix=h, kind="nc-dirac", basis=basis, phys=phys,
                             potential=pot, nc=nc)


def rest_frame_h(basis: BasisSpec, phys: PhysParams, nc: NCParams,
                 rep: SpinorRep | None = None, ops: OperatorSet | None = None) -> HamiltonianMatrix:
    """Rest-frame Hamiltonian beta m0 c^2 + (c/hbar) eta Q_eta.

    The momentum deformation survives even with all kinetic and potential
    terms switched off.  For eta = 0 the matrix is diagonal with entries
    +-m0 c^2, each of multiplicity 2 n_max^2.
    """
    rep = rep or standard_rep()
    if ops is None:
        ops = build_canonical_ops(basis, hbar=phys.hbar)
    h = phys.rest_energy * _spin_embed(rep.beta, basis.dim)
    if nc.eta != 0.0:
        h = h + (phys.c / phys.hbar) * nc.eta * q_eta(basis, rep=rep, ops=ops)
    return HamiltonianMatrix(matrix=h, kind="nc-rest-frame" if nc.eta else "rest-frame",
                             basis=basis, phys=phys, nc=nc)


def rest_frame_spectrum(basis: BasisSpec, phys: PhysParams, nc: NCParams, k: int | None = None):
    """Diagonalize :func:`rest_frame_h` (no closed form is attempted for eta != 0)."""
    from .limits import spectrum  # local import: limits depends on this module

    return spectrum(rest_frame_h(basis, phys, nc), k)


# --------------------------------------------------------------------------
# Pauli family
# --------------------------------------------------------------------------

def pauli_h_full(basis: BasisSpec, pot: EMPotential, phys: PhysParams,
                 rep: SpinorRep | None = None, ops: OperatorSet | None = None) -> HamiltonianMatrix:
    """Two-component Pauli Hamiltonian with the full kinetic momentum.

    H = Pi^2/2m0 - (e hbar / 2 m0 c) sigma.B + e A0, B = curl A constant.
    The g = 2 spin coupling makes the lowest Landau level sit exactly at zero
    energy for e B > 0.
    """
    rep = rep or standard_rep()
    ops = _ops_for(basis, phys, ops)
    pi_x, pi_y = kinetic_momentum(ops, pot, phys)
    n = basis.dim
    h = np.kron(np.eye(2), (pi_x @ pi_x + pi_y @ pi_y) / (2.0 * phys.m0))
    b = pot.b_field
    if b != 0.0:
        h = h - (phys.e * phys.hbar * b / (2.0 * phys.m0 * phys.c)) * _spin_embed(rep.sigma[2], n)
    if pot.a0_coeffs != (0.0, 0.0):
        h = h + phys.e * np.kron(np.eye(2), a0_matrix(ops, pot))
    return HamiltonianMatrix(matrix=h, kind="pauli-full", basis=basis, phys=phys, potential=pot)


def _pauli_linear_kinetic(ops: OperatorSet, b_field: float, phys: PhysParams,
                          rep: SpinorRep) -> np.ndarray:
    """K = p^2/2m0 - (e B / 2 m0 c)(L_z + 2 S_z), the diamagnetic-free kinetic part."""
    n = ops.basis.dim
    k = np.kron(np.eye(2), (ops.px @ ops.px + ops.py @ ops.py) / (2.0 * phys.m0))
    if b_field != 0.0:
        lz = lz_matrix(ops)
        two_sz = phys.hbar * rep.sigma[2]  # 2 S_z = hbar sigma_z
        zeeman = np.kron(np.eye(2), lz) + _spin_embed(two_sz, n)
        k = k - (phys.e * b_field / (2.0 * phys.m0 * phys.c)) * zeeman
    return k


def pauli_h_linear(basis: BasisSpec, b_field: float, phys: PhysParams,
                   a0_coeffs: tuple[float, float] = (0.0, 0.0),
                   rep: SpinorRep | None = None, ops: OperatorSet | None = None) -> HamiltonianMatrix:
    """Pauli Hamiltonian linearized in B (diamagnetic A^2 term dropped).

    H = p^2/2m0 - (e B / 2 m0 c)(L_z + 2 S_z) + e A0.  The relative factor 2
    between the spin and orbital Zeeman couplings is the g-factor statement;
    it is exact by construction and pinned by tests.
    """
    rep = rep or standard_rep()
    ops = _ops_for(basis, phys, ops)
    h = _pauli_linear_kinetic(ops, b_field, phys, rep)
    if a0_coeffs != (0.0, 0.0):
        pot = EMPotential.linear(((0.0, 0.0), (0.0, 0.0)), a0_coeffs)
        h = h + phys.e * np.kron(np.eye(2), a0_matrix(ops, pot))
    return HamiltonianMatrix(matrix=h, kind="pauli-linear", basis=basis, phys=phys,
                             extra={"b_field": b_field, "a0_coeffs": tuple(a0_coeffs)})


def theta_kinetic_factor(basis: BasisSpec, pot: EMPotential, phys: PhysParams, nc: NCParams,
                         rep: SpinorRep | None = None, ops: OperatorSet | None = None,
                         qtheta_mode: str = "sigma") -> np.ndarray:
    """Theta_theta = (e theta / 2 m0 hbar c^2) * Q_theta(2-component).

    Dimensionless, Hermitian for affine potentials; the geometric series of
    the kinetic factor converges iff its spectral radius is below one.
    """
    q2 = q_theta_pauli(basis, pot, phys, rep=rep, ops=ops, mode=qtheta_mode)
    return (phys.e * nc.theta / (2.0 * phys.m0 * phys.hbar * phys.c**2)) * q2


def _series_kinetic(theta_mat: np.ndarray, kin: np.ndarray, order: int) -> np.ndarray:
    """Sum_j (Theta^j K + K Theta^j)/2 for j = 0..order."""
    h = kin.copy()
    if not np.any(theta_mat):
        return h
    power = np.eye(theta_mat.shape[0], dtype=complex)
    for _ in range(order):
        power = power @ theta_mat
        h = h + 0.5 * (power @ kin + kin @ power)
    return h


def nc_pauli_h(basis: BasisSpec, pot: EMPotential, phys: PhysParams, nc: NCParams,
               order: int = 8, qtheta_mode: str = "sigma",
               rep: SpinorRep | None = None, ops: OperatorSet | None = None) -> HamiltonianMatrix:
    """Noncommutative Pauli Hamiltonian via the kinetic-factor series.

    H = sum_{j<=order} (Theta^j K + K Theta^j)/2 + e A0 + 2 m0 c^2 Theta,
    K = p^2/2m0 - (e B / 2 m0 c)(L_z + 2 S_z).

    Contains no eta dependence whatsoever: the momentum deformation cancels
    from the two-component reduction, which is the noncommutative headline
    result this builder operationalizes.  Raises
    :class:`SeriesDivergenceError` when the series cannot converge.
    """
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    rep = rep or standard_rep()
    ops = _ops_for(basis, phys, ops)
    theta_mat = theta_kinetic_factor(basis, pot, phys, nc, rep=rep, ops=ops,
                                     qtheta_mode=qtheta_mode)
    rho = _spectral_radius(theta_mat)
    if rho >= 1.0:
        raise SeriesDivergenceError(
            f"series divergence: spectral radius of the theta kinetic factor is "
            f"{rho:.6g} >= 1 (theta={nc.theta!r}); reduce theta or the basis size")
    kin = _pauli_linear_kinetic(ops, pot.b_field, phys, rep)
    h = _series_kinetic(theta_mat, kin, order)
    if pot.a0_coeffs != (0.0, 0.0):
        h = h + phys.e * np.kron(np.eye(2), a0_matrix(ops, pot))
    if nc.theta != 0.0:
        h = h + (2.0 * phys.m0 * phys.c**2) * theta_mat
    return HamiltonianMatrix(matrix=h, kind=f"nc-pauli(order={order})", basis=basis,
                             phys=phys, potential=pot, nc=nc,
                             extra={"order": order, "qtheta_mode": qtheta_mode,
                                    "spectral_radius": rho})


def nc_pauli_h_exact(basis: BasisSpec, pot: EMPotential, phys: PhysParams, nc: NCParams,
                     qtheta_mode: str = "sigma",
                     rep: SpinorRep | None = None, ops: OperatorSet | None = None) -> HamiltonianMatrix:
    """Closed-form counterpart of :func:`nc_pauli_h`: symmetrized exact inverse.

    H = ((1 - Theta)^-1 K + K (1 - Theta)^-1)/2 + e A0 + 2 m0 c^2 Theta.
    Useful as an oracle for the series remainder, which shrinks geometrically
    with ratio ~ spectral radius of Theta.
    """
    rep = rep or standard_rep()
    ops = _ops_for(basis, phys, ops)
    theta_mat = theta_kinetic_factor(basis, pot, phys, nc, rep=rep, ops=ops,
                                     qtheta_mode=qtheta_mode)
    rho = _spectral_radius(theta_mat)
    if rho >= 1.0:
        raise SeriesDivergenceError(
            f"series divergence: kinetic factor is not invertible, spectral "
            f"radius {rho:.6g} >= 1")
    kin = _pauli_linear_kinetic(ops, pot.b_field, phys, rep)
    dim = theta_mat.shape[0]
    resolvent = np.linalg.solve(np.eye(dim, dtype=complex) - theta_mat,
                                np.eye(dim, dtype=complex))
    h = 0.5 * (resolvent @ kin + kin @ resolvent)
    if pot.a0_coeffs != (0.0, 0.0):
        h = h + phys.e * np.kron(np.eye(2), a0_matrix(ops, pot))
    if nc.theta != 0.0:
        h = h + (2.0 * phys.m0 * phys.c**2) * theta_mat
    return HamiltonianMatrix(matrix=h, kind="nc-pauli(exact)", basis=basis, phys=phys,
                             potential=pot, nc=nc,
                             extra={"qtheta_mode": qtheta_mode, "spectral_radius": rho})


def _spectral_radius(hermitian_mat: np.ndarray) -> float:
    if not np.any(hermitian_mat):
        return 0.0
    return float(np.abs(np.linalg.eigvalsh(hermitian_mat)).max())


def operator_bundle(basis: BasisSpec, pot: EMPotential, phys: PhysParams, nc: NCParams,
                    rep: SpinorRep | None = None, ops: OperatorSet | None = None,
                    qtheta_mode: str = "sigma") -> OperatorBundle:
    """Collect the shared operator ingredients (with scalars folded in where noted)."""
    rep = rep or standard_rep()
    ops = _ops_for(basis, phys, ops)
    pi_x, pi_y = kinetic_momentum(ops, pot, phys)
    return OperatorBundle(
        pi_x=pi_x,
        pi_y=pi_y,
        lz=lz_matrix(ops),
        sz=_spin_embed(phys.hbar / 2.0 * rep.sigma[2], basis.dim),
        q_eta=q_eta(basis, rep=rep, ops=ops),
        q_theta=nc.theta * q_theta(basis, pot, phys, rep=rep, ops=ops),
        theta_theta=theta_kinetic_factor(basis, pot, phys, nc, rep=rep, ops=ops,
                                         qtheta_mode=qtheta_mode),
    )
