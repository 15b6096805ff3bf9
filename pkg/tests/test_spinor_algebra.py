import numpy as np
import pytest

from ncdirac.spinor_algebra import (
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    alpha_dot,
    anticommutator,
    clifford_residual,
    max_abs,
    pauli_identity_residual,
    sigma_dot,
    standard_rep,
)
from ncdirac.phase_space import BasisSpec, build_canonical_ops, interior_mask
from ncdirac.hamiltonians import EMPotential, PhysParams, kinetic_momentum


class TestPauliMatrices:

    def test_hermitian_traceless(self):
        for s in (SIGMA_X, SIGMA_Y, SIGMA_Z):
            assert np.array_equal(s, s.conj().T)
            assert np.trace(s) == 0

    def test_commutators(self):
        # [sx, sy] = 2i sz and cyclic
        assert np.array_equal(SIGMA_X @ SIGMA_Y - SIGMA_Y @ SIGMA_X, 2j * SIGMA_Z)
        assert np.array_equal(SIGMA_Y @ SIGMA_Z - SIGMA_Z @ SIGMA_Y, 2j * SIGMA_X)
        assert np.array_equal(SIGMA_Z @ SIGMA_X - SIGMA_X @ SIGMA_Z, 2j * SIGMA_Y)

    def test_squares_are_identity(self):
        for s in (SIGMA_X, SIGMA_Y, SIGMA_Z):
            assert np.array_equal(s @ s, np.eye(2, dtype=complex))


class TestStandardRep:

    def test_clifford_residual_exactly_zero(self):
        """Anticommutator relations hold without rounding: entries are 0, +-1, +-i."""
        assert clifford_residual(standard_rep()) == 0.0

    def test_alpha_beta_hermitian(self):
        rep = standard_rep()
        for m in (*rep.alpha, rep.beta):
            assert np.array_equal(m, m.conj().T)

    def test_alpha_anticommutes_with_beta(self):
        rep = standard_rep()
        for a in rep.alpha:
            assert max_abs(anticommutator(a, rep.beta)) == 0.0


class TestPauliIdentity:
    """(sigma.a)(sigma.b) = a.b + i sigma.(a x b), scalar and operator flavors."""

    def test_random_real_pairs(self):
        rep = standard_rep()
        rng = np.random.default_rng(7)
        worst = 0.0
        for _ in range(100):
            a, b = rng.standard_normal(3), rng.standard_normal(3)
            worst = max(worst, pauli_identity_residual(rep, a, b))
        assert worst < 1e-14

    def test_complex_scalars(self):
        rep = standard_rep()
        rng = np.random.default_rng(11)
        for _ in range(20):
            a = rng.standard_normal(3) + 1j * rng.standard_normal(3)
            b = rng.standard_normal(3) + 1j * rng.standard_normal(3)
            assert pauli_identity_residual(rep, a, b) < 1e-13

    def test_explicit_cross_override_scalar(self):
        rep = standard_rep()
        a, b = (1.0, 2.0, 3.0), (-0.5, 0.25, 4.0)
        cross = (2.0 * 4.0 - 3.0 * 0.25,
                 3.0 * -0.5 - 1.0 * 4.0,
                 1.0 * 0.25 - 2.0 * -0.5)
        assert pauli_identity_residual(rep, a, b, cross=cross) < 1e-14

    def test_operator_valued_ordered_cross_is_exact(self):
        """With the ordered cross product the identity is an algebraic one,
        true for arbitrary (even non-commuting) matrix components."""
        rep = standard_rep()
        ops = build_canonical_ops(BasisSpec(6))
        a = (ops.x, ops.px, 0.0)
        assert pauli_identity_residual(rep, a, a) < 1e-13

    def test_operator_field_form_on_interior(self):
        # (sigma.Pi)^2 = Pi^2 - (e/c) hbar sigma.B after replacing the
        # commutator [Pi_x, Pi_y] by its closed form; holds only away from
        # the truncation boundary, hence the projector.
        rep = standard_rep()
        phys = PhysParams(m0=1.0, c=10.0, e=1.0)
        basis = BasisSpec(10)
        pot = EMPotential.symmetric_gauge(2.5)
        ops = build_canonical_ops(basis, hbar=phys.hbar)
        pi_x, pi_y = kinetic_momentum(ops, pot, phys)
        cross = (0.0, 0.0, 1j * phys.hbar * (phys.e / phys.c) * pot.b_field)
        proj = np.diag(interior_mask(basis.n_max, 2).astype(float))
        resid = pauli_identity_residual(rep, (pi_x, pi_y, 0.0), (pi_x, pi_y, 0.0),
                                        cross=cross, projector=proj)
        assert resid < 1e-10

    def test_operator_field_form_fails_without_projector(self):
        # sanity check that the projector is doing real work: the closed-form
        # commutator is wrong on the truncation corner states
        rep = standard_rep()
        phys = PhysParams(m0=1.0, c=10.0, e=1.0)
        basis = BasisSpec(10)
        pot = EMPotential.symmetric_gauge(2.5)
        ops = build_canonical_ops(basis, hbar=phys.hbar)
        pi_x, pi_y = kinetic_momentum(ops, pot, phys)
        cross = (0.0, 0.0, 1j * phys.hbar * (phys.e / phys.c) * pot.b_field)
        resid = pauli_identity_residual(rep, (pi_x, pi_y, 0.0), (pi_x, pi_y, 0.0),
                                        cross=cross)
        assert resid > 1e-2


def test_sigma_dot_scalar_components():
    rep = standard_rep()
    assert np.array_equal(sigma_dot(rep, (0.0, 0.0, 1.0)), SIGMA_Z)
    assert np.array_equal(sigma_dot(rep, (1.0, 0.0, 0.0)), SIGMA_X)


def test_sigma_dot_operator_components_dimension():
    rep = standard_rep()
    ops = build_canonical_ops(BasisSpec(4))
    m = sigma_dot(rep, (ops.x, ops.y, 0.0))
    assert m.shape == (32, 32)      # 2 * 4^2


def test_alpha_dot_mixed_components():
    rep = standard_rep()
    ops = build_canonical_ops(BasisSpec(4))
    m = alpha_dot(rep, (ops.px, 0.0, 0.0))
    assert m.shape == (64, 64)
    assert np.array_equal(m, m.conj().T)


def test_promote_rejects_mismatched_dimensions():
    rep = standard_rep()
    a = (np.eye(4), np.eye(6), 0.0)
    with pytest.raises(ValueError):
        sigma_dot(rep, a)


def test_max_abs_empty_matrix():
    assert max_abs(np.zeros((0, 0))) == 0.0
