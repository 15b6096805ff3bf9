"""End-to-end acceptance checks, one test per shipped guarantee.

Each test pins the tolerance and the runtime budget it must meet; the
conftest hook prints a PASS/FAIL line per test at the end of the run.
"""
import math
import os
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from ncdirac.spinor_algebra import (
    clifford_residual,
    max_abs,
    pauli_identity_residual,
    standard_rep,
)
from ncdirac.phase_space import (
    BasisSpec,
    NCParams,
    PolySymbol,
    bopp_shift,
    build_canonical_ops,
    commutator,
    hbar_eff,
    interior_block,
    interior_mask,
    moyal_bracket,
    nc_algebra_report,
    star_first_order,
    star_product,
)
from ncdirac.hamiltonians import (
    EMPotential,
    PhysParams,
    dirac_h,
    kinetic_momentum,
    lz_matrix,
    nc_dirac_h,
    nc_pauli_h,
    pauli_h_full,
    pauli_h_linear,
    rest_frame_spectrum,
)
from ncdirac.limits import (
    Scenario,
    elimination_scan,
    interior_levels,
    landau_table,
    nc_shift_sweep,
    nonrel_convergence,
    perturbation_slopes,
    series_truncation_error,
)

GOLDEN = Path(__file__).parent / "golden"
COMMANDS = ("algebra-check", "nc-algebra", "landau", "convergence",
            "nc-sweep", "series")


class budget:
    """Fail the test if its body exceeds the promised wall-time budget."""

    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        if exc[0] is None:
            elapsed = time.perf_counter() - self.start
            assert elapsed < self.seconds, (
                f"exceeded runtime budget: {elapsed:.1f}s >= {self.seconds}s")


def test_01_clifford_relations_hold_exactly():
    with budget(1.0):
        rep = standard_rep()
        assert clifford_residual(rep) == 0.0
        # spot-check the individual relations, not just the aggregate
        for i, a in enumerate(rep.alpha):
            assert np.array_equal(a @ a, np.eye(4, dtype=complex))
            assert max_abs(a @ rep.beta + rep.beta @ a) == 0.0
            for j, b in enumerate(rep.alpha):
                if i != j:
                    assert max_abs(a @ b + b @ a) == 0.0
        assert np.array_equal(rep.beta @ rep.beta, np.eye(4, dtype=complex))


def test_02_pauli_identity_scalar_and_operator():
    with budget(10.0):
        rep = standard_rep()
        rng = np.random.default_rng(2024)
        worst = 0.0
        for _ in range(100):
            a, b = rng.standard_normal(3), rng.standard_normal(3)
            worst = max(worst, pauli_identity_residual(rep, a, b))
        assert worst < 1e-14

        # operator form: (sigma.Pi)^2 = Pi^2 - (e/c) hbar sigma.B on the
        # interior of a 16-level basis
        scen = Scenario(n_max=16, margin=2)
        phys, pot = scen.phys(), scen.potential()
        ops = build_canonical_ops(scen.basis(), hbar=phys.hbar)
        pi_x, pi_y = kinetic_momentum(ops, pot, phys)
        cross = (0.0, 0.0, 1j * phys.hbar * (phys.e / phys.c) * pot.b_field)
        proj = np.diag(interior_mask(16, scen.margin).astype(float))
        resid = pauli_identity_residual(rep, (pi_x, pi_y, 0.0), (pi_x, pi_y, 0.0),
                                        cross=cross, projector=proj)
        assert resid < 1e-10


def test_03_deformed_algebra_grid_and_sign_regression():
    with budget(30.0):
        basis = BasisSpec(12)
        base = build_canonical_ops(basis)
        for theta in (0.0, 0.1, -0.1, 0.3, -0.3):
            for eta in (0.0, 0.1, -0.1, 0.3, -0.3):
                nc = NCParams(theta=theta, eta=eta)
                report = nc_algebra_report(bopp_shift(base, nc), nc, margin=2)
                for key in ("xy", "pxpy", "xpx", "ypy", "xpy", "ypx"):
                    assert report[key] < 1e-10, (theta, eta, key)
                assert report["hbar_eff_residual"] < 1e-10
                assert abs(report["hbar_eff_measured"] - hbar_eff(nc)) < 1e-10

        # regression: shifting y with the tempting symmetric sign collapses
        # [x, y] to zero; the deviation from the i*theta target is |theta|
        theta = 0.3
        x_slip = base.x - (theta / 2.0) * base.py
        y_slip = base.y - (theta / 2.0) * base.px
        mask = interior_mask(12, 2)
        comm = interior_block(commutator(x_slip, y_slip), mask)
        dev = max_abs(comm - 1j * theta * np.eye(comm.shape[0]))
        assert dev == pytest.approx(abs(theta), rel=1e-9)


def test_04_star_product_exactness():
    with budget(1.0):
        x, y = PolySymbol.x(), PolySymbol.y()
        theta = Fraction(3, 8)
        assert moyal_bracket(x, y, theta) == PolySymbol.const(1j * 0.375)
        # associativity on degree <= 3 polynomials, exact rational arithmetic
        rng = np.random.default_rng(5)
        monos = [PolySymbol.const(1), x, y, x * x, x * y, y * y,
                 x * x * x, x * x * y, x * y * y, y * y * y]
        for _ in range(10):
            cf, cg, ch = rng.integers(-3, 4, size=(3, len(monos)))
            f = sum((int(c) * m for c, m in zip(cf, monos)), PolySymbol.const(0))
            g = sum((int(c) * m for c, m in zip(cg, monos)), PolySymbol.const(0))
            h = sum((int(c) * m for c, m in zip(ch, monos)), PolySymbol.const(0))
            assert star_product(star_product(f, g, theta), h, theta) \
                == star_product(f, star_product(g, h, theta), theta)
        # first-order truncation is the whole series for affine left factors
        f_affine = 2 * x - y + 5
        g_any = x * x * y - 3 * y * y + x
        assert star_first_order(f_affine, g_any, theta) \
            == star_product(f_affine, g_any, theta)


def test_05_rest_frame_spectrum():
    with budget(5.0):
        phys = PhysParams(m0=1.0, c=50.0, e=1.0)
        spec = rest_frame_spectrum(BasisSpec(12), phys, NCParams())
        vals = np.array(spec.eigenvalues)
        rest = phys.rest_energy
        assert np.all(np.abs(np.abs(vals) - rest) <= 1e-12 * rest)
        assert (vals > 0).sum() == 2 * 12 * 12
        assert (vals < 0).sum() == 2 * 12 * 12


def test_06_landau_zero_mode_and_g_factor():
    with budget(30.0):
        scen = Scenario(n_max=16, margin=2, b_reduced=1.0, c=50.0)
        h = pauli_h_full(scen.basis(), scen.potential(), scen.phys())
        vals, vecs = np.linalg.eigh(h.matrix)
        hw = scen.hbar * scen.omega_c
        assert np.abs(vals).min() < 1e-8 * hw
        levels = interior_levels(vals, vecs, scen.basis(), scen.margin, 2,
                                 scen.boundary_tol, scen.cluster_tol(scen.c))
        assert len(levels) >= 5
        for n, lev in enumerate(levels[:5]):
            if n == 0:
                assert abs(lev.value) < 1e-8 * hw
            else:
                assert abs(lev.value - n * hw) < 1e-6 * n * hw

        # gyromagnetic ratio from the linear-field matrix itself: with
        # hbar = m0 = e = c = 1, B = 2 all coefficients are exact and the
        # spin step is exactly twice the orbital step
        basis = BasisSpec(16, 1.0)
        unit = PhysParams(m0=1.0, c=1.0, e=1.0, hbar=1.0)
        hb = pauli_h_linear(basis, 2.0, unit).matrix
        n = basis.dim
        up, down = hb[:n, :n], hb[n:, n:]
        lz = lz_matrix(build_canonical_ops(basis, hbar=1.0))
        support = lz != 0
        assert np.array_equal(up[support], -lz[support])          # orbital = 1
        spin_step = down - up
        assert max_abs(spin_step - np.diag(np.diag(spin_step))) == 0.0
        assert np.median(np.diag(spin_step).real) == 2.0          # spin = 2


def test_07_relativistic_landau_oracle():
    with budget(60.0):
        scen = Scenario(n_max=16, margin=2, b_reduced=1.0, c=50.0)
        table = landau_table(scen, 4)
        assert [row[0] for row in table.rows] == [0, 1, 2, 3]
        for row in table.rows:
            assert row[6] < 1e-6        # relative error vs closed form


def test_08_nonrelativistic_convergence():
    with budget(120.0):
        scen = Scenario(n_max=12, margin=2, b_reduced=1.0)
        report = nonrel_convergence(scen, [10.0, 20.0, 40.0, 80.0], range(4))
        assert -2.4 < report.fitted_slope < -1.6
        assert all(b < a for a, b in zip(report.errors, report.errors[1:]))
        assert report.tracking_failures == ()


def test_09_small_component_scaling():
    with budget(60.0):
        scen = Scenario(n_max=12, margin=2, b_reduced=1.0)
        table = elimination_scan(scen, [20.0, 40.0, 80.0], level=1)
        ratios = [row[2] for row in table.rows]
        resids = [row[3] for row in table.rows]
        for lo, hi in zip(ratios, ratios[1:]):
            assert 0.4 < hi / lo < 0.6          # |chi|/|phi| ~ 1/c
        for lo, hi in zip(resids, resids[1:]):
            assert 0.2 < hi / lo < 0.3          # prediction residual ~ 1/c^2


def test_10_nc_limit_recovery_linearity_series():
    with budget(120.0):
        scen = Scenario(n_max=12, margin=2, b_reduced=1.0, c=50.0)
        basis, phys, pot = scen.basis(), scen.phys(), scen.potential()

        # bitwise recovery of the commutative builders at theta = eta = 0
        assert np.array_equal(nc_dirac_h(basis, pot, phys, NCParams()).matrix,
                              dirac_h(basis, pot, phys).matrix)

        # NC Pauli is exactly eta-independent
        a = nc_pauli_h(basis, pot, phys, NCParams(theta=1e-3, eta=0.0))
        b = nc_pauli_h(basis, pot, phys, NCParams(theta=1e-3, eta=0.7))
        assert np.array_equal(a.matrix, b.matrix)

        # sweep: zero point is exactly zero, and theta shifts are linear,
        # matching first-order perturbation theory to 5% (levels whose slope
        # is itself numerically zero are held to a floor instead)
        theta = 1e-3
        table = nc_shift_sweep(scen, [0.0, theta], [0.0], 4)
        assert table.meta["pauli_eta_independent"] is True
        slopes = perturbation_slopes(scen, 4)
        scale = max(abs(s) for s in slopes)
        for row in table.rows:
            if row[0] == 0.0 and row[1] == 0.0:
                assert row[4] == 0.0 and row[6] == 0.0
            if row[0] == theta:
                fd = row[4] / theta
                lvl = row[2]
                assert abs(fd - slopes[lvl]) <= 0.05 * max(abs(slopes[lvl]),
                                                           1e-6 * scale)

        # order-8 series against the exact resolvent at theta = 1e-3
        series_scen = Scenario(n_max=12, c=1.0, b_reduced=1.0)
        table = series_truncation_error(series_scen, 1e-3, [8])
        assert table.rows[0][1] < 1e-8


def _cli(command, *args, fmt="csv", threads="1"):
    env = dict(os.environ, OMP_NUM_THREADS=threads, OPENBLAS_NUM_THREADS=threads,
               MKL_NUM_THREADS=threads)
    out = subprocess.run(
        [sys.executable, "-m", "ncdirac.cli", command, "--format", fmt, *args],
        capture_output=True, env=env, check=True)
    return out.stdout


def _pin_wall_time(data: bytes) -> bytes:
    lines = data.decode().splitlines()
    fixed = ['"wall_time_s": 0.0' if ln.startswith('"wall_time_s"') else ln
             for ln in lines]
    return ("\n".join(fixed) + "\n").encode()


def test_11_cli_determinism_and_golden_files():
    with budget(120.0):
        for command in COMMANDS:
            first = _cli(command)
            second = _cli(command)
            threaded = _cli(command, threads="4")
            assert first == second, command
            assert first == threaded, command
            assert first == (GOLDEN / f"{command}.csv").read_bytes(), command

            js = _pin_wall_time(_cli(command, fmt="json"))
            js2 = _pin_wall_time(_cli(command, fmt="json", threads="4"))
            assert js == js2, command
            assert js == (GOLDEN / f"{command}.json").read_bytes(), command
