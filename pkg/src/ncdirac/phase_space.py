"""Two-dimensional noncommutative phase space on a truncated oscillator basis.

The deformed algebra is

    [x, y] = i*theta,   [p_x, p_y] = i*eta,   [x_i, p_j] = i*hbar_eff*delta_ij,

with ``hbar_eff = hbar*(1 + theta*eta/(4*hbar^2))``, both noncommutativity
parameters pointing along z (the problem is planar).  Two realizations are
provided:

* **operators** — canonical x, y, p_x, p_y as matrices on a two-axis harmonic
  oscillator basis truncated at ``n_max`` levels per axis, deformed by the
  linear Bopp shift.  Basis states |n_x, n_y> are enumerated with the flat
  index ``n_x * n_max + n_y`` (x-quanta slow).  Truncation corrupts the top
  ladder states, so algebra statements hold on an *interior* block: states
  with ``n_x, n_y <= n_max - 1 - margin``.
* **symbols** — polynomials in (x, y) with exact complex-rational
  coefficients, multiplied with the Moyal star product.  For polynomials the
  star series terminates, so star-product identities are exact equalities of
  coefficient tables, not approximate numerics.

The Bopp-shift sign convention is fixed by requiring the deformed algebra to
close (see :func:`bopp_shift`).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real

import numpy as np

__all__ = [
    "NCParams",
    "BasisSpec",
    "OperatorSet",
    "build_canonical_ops",
    "bopp_shift",
    "hbar_eff",
    "commutator",
    "interior_mask",
    "interior_block",
    "nc_algebra_report",
    "PolySymbol",
    "star_product",
    "star_first_order",
    "moyal_bracket",
]


# --------------------------------------------------------------------------
# parameters and basis
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class NCParams:
    """Noncommutativity parameters: theta (length^2), eta (momentum^2), hbar."""

    theta: float = 0.0
    eta: float = 0.0
    hbar: float = 1.0

    def __post_init__(self):
        if not (self.hbar > 0):
            raise ValueError(f"hbar must be positive, got {self.hbar}")
        if not (math.isfinite(self.theta) and math.isfinite(self.eta)):
            raise ValueError("theta and eta must be finite")

    @property
    def commutative(self) -> bool:
        return self.theta == 0.0 and self.eta == 0.0


def hbar_eff(nc: NCParams) -> float:
    """Effective Planck constant hbar*(1 + theta*eta/(4*hbar^2)) of the deformed [x, p]."""
    return nc.hbar * (1.0 + nc.theta * nc.eta / (4.0 * nc.hbar**2))


@dataclass(frozen=True)
class BasisSpec:
    """Truncated two-axis oscillator basis: ``n_max`` levels per axis, index n_x*n_max + n_y."""

    n_max: int
    osc_length: float = 1.0

    def __post_init__(self):
        if self.n_max < 4:
            raise ValueError(f"n_max must be at least 4, got {self.n_max}")
        if not (self.osc_length > 0):
            raise ValueError(f"osc_length must be positive, got {self.osc_length}")

    @property
    def dim(self) -> int:
        return self.n_max * self.n_max

    def index(self, n_x: int, n_y: int) -> int:
        return n_x * self.n_max + n_y


@dataclass(frozen=True)
class OperatorSet:
    """x, y, px, py matrices on a :class:`BasisSpec`; tag records Bopp-shift state."""

    x: np.ndarray
    y: np.ndarray
    px: np.ndarray
    py: np.ndarray
    basis: BasisSpec
    hbar: float = 1.0
    tag: str = "commutative"           # "commutative" | "bopp-shifted"
    nc: NCParams | None = None


def _ladder(n: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1.0, n)), 1)


def build_canonical_ops(basis: BasisSpec, hbar: float = 1.0) -> OperatorSet:
    """Canonical operators x ~ (a + a'), p ~ i(a' - a) per axis on the truncated basis.

    With ``l = osc_length``: x = l/sqrt(2) (a + a'), p = i hbar/(l sqrt(2)) (a' - a).
    On the interior block [x, px] = i*hbar exactly; at the truncation corner the
    commutator sags by hbar*n_max on the |n_max-1> diagonal entry.
    """
    n = basis.n_max
    a = _ladder(n)
    ad = a.T.conj()
    l = basis.osc_length
    x1 = (l / math.sqrt(2.0)) * (a + ad)
    p1 = (1j * hbar / (l * math.sqrt(2.0))) * (ad - a)
    eye = np.eye(n)
    return OperatorSet(
        x=np.kron(x1, eye).astype(complex),
        y=np.kron(eye, x1).astype(complex),
        px=np.kron(p1, eye),
        py=np.kron(eye, p1),
        basis=basis,
        hbar=hbar,
        tag="commutative",
    )


def bopp_shift(ops: OperatorSet, nc: NCParams) -> OperatorSet:
    """Deform canonical operators linearly so the noncommutative algebra closes.

        x  -> x  - (theta/2 hbar) p_y        p_x -> p_x + (eta/2 hbar) y
        y  -> y  + (theta/2 hbar) p_x        p_y -> p_y - (eta/2 hbar) x

    The *plus* sign on the y shift is forced: with the tempting symmetric
    choice ``y - (theta/2 hbar) p_x`` the two cross-commutators cancel and
    [x, y] collapses to zero instead of i*theta, which the regression tests
    pin down.  In the commutative limit theta = eta = 0 the input matrices
    are returned bitwise.
    """
    if ops.tag != "commutative":
        raise ValueError("bopp_shift expects a commutative OperatorSet (already shifted?)")
    if nc.hbar != ops.hbar:
        raise ValueError(f"NCParams.hbar={nc.hbar} disagrees with OperatorSet.hbar={ops.hbar}")
    if nc.commutative:
        x, y, px, py = ops.x, ops.y, ops.px, ops.py
    else:
        st = nc.theta / (2.0 * nc.hbar)
        se = nc.eta / (2.0 * nc.hbar)
        x = ops.x - st * ops.py
        y = ops.y + st * ops.px
        px = ops.px + se * ops.y
        py = ops.py - se * ops.x
    return OperatorSet(x=x, y=y, px=px, py=py, basis=ops.basis, hbar=ops.hbar,
                       tag="bopp-shifted", nc=nc)


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"commutator needs equal square matrices, got {a.shape} and {b.shape}")
    return a @ b - b @ a


def interior_mask(n_max: int, margin: int) -> np.ndarray:
    """Boolean mask (length n_max^2) of states with n_x, n_y <= n_max - 1 - margin."""
    if not (0 <= margin < n_max):
        raise ValueError(f"margin must satisfy 0 <= margin < n_max, got {margin}")
    keep = np.zeros((n_max, n_max), dtype=bool)
    keep[: n_max - margin, : n_max - margin] = True
    return keep.reshape(-1)


def interior_block(m: np.ndarray, mask: np.ndarray) -> np.ndarray:
    """Submatrix of m on the masked (interior) states."""
    idx = np.flatnonzero(mask)
    return m[np.ix_(idx, idx)]


def shell_mask(n_max: int, margin: int) -> np.ndarray:
    """Boolean mask (length n_max^2) of states with n_x + n_y <= n_max - 1 - margin.

    Complements :func:`interior_mask`: the per-mode mask captures where the
    *ladder algebra* is exact (the truncation defect sits at single-mode index
    n_max - 1), while this total-quanta mask captures where *eigenvectors* are
    trustworthy — two-mode quadratic Hamiltonians conserve total quanta, so a
    state with no weight on the top shells cannot feel the truncation at all.
    """
    if not (0 <= margin < n_max):
        raise ValueError(f"margin must satisfy 0 <= margin < n_max, got {margin}")
    nx, ny = np.meshgrid(np.arange(n_max), np.arange(n_max), indexing="ij")
    return ((nx + ny) <= n_max - 1 - margin).reshape(-1)


def _max_abs(m: np.ndarray) -> float:
    return float(np.abs(m).max()) if m.size else 0.0


def nc_algebra_report(ops: OperatorSet, nc: NCParams, margin: int = 2) -> dict[str, float]:
    """Interior residuals of all six deformed commutation relations.

    Returns max-abs residuals keyed ``xy, pxpy, xpx, ypy, xpy, ypx`` (targets
    i*theta, i*eta, i*hbar_eff, i*hbar_eff, 0, 0), plus the measured effective
    Planck constant (``hbar_eff_measured``, from the interior mean diagonal of
    [x, px]/i) and its deviation from the closed form (``hbar_eff_residual``).
    """
    if ops.tag != "bopp-shifted":
        raise ValueError("nc_algebra_report expects a bopp-shifted OperatorSet")
    mask = interior_mask(ops.basis.n_max, margin)
    eye = np.eye(int(mask.sum()))
    heff = hbar_eff(nc)

    def resid(a, b, target):
        block = interior_block(commutator(a, b), mask)
        return _max_abs(block - 1j * target * eye)

    xpx_block = interior_block(commutator(ops.x, ops.px), mask)
    measured = float(np.mean(np.imag(np.diagonal(xpx_block))))
    return {
        "xy": resid(ops.x, ops.y, nc.theta),
        "pxpy": resid(ops.px, ops.py, nc.eta),
        "xpx": _max_abs(xpx_block - 1j * heff * eye),
        "ypy": resid(ops.y, ops.py, heff),
        "xpy": resid(ops.x, ops.py, 0.0),
        "ypx": resid(ops.y, ops.px, 0.0),
        "hbar_eff_measured": measured,
        "hbar_eff_residual": abs(measured - heff),
    }


# --------------------------------------------------------------------------
# polynomial symbols and the Moyal star product
# --------------------------------------------------------------------------

def _to_frac_pair(z) -> tuple[Fraction, Fraction]:
    """Exact complex-rational form of a number (floats convert exactly)."""
    if isinstance(z, tuple):
        return z
    if isinstance(z, complex):
        return (Fraction(z.real), Fraction(z.imag))
    if isinstance(z, (int, Fraction)):
        return (Fraction(z), Fraction(0))
    if isinstance(z, Real):
        return (Fraction(float(z)), Fraction(0))
    raise TypeError(f"cannot use {type(z).__name__} as a polynomial coefficient")


def _cadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


_I_POWERS = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)),
             (Fraction(-1), Fraction(0)), (Fraction(0), Fraction(-1)))


class PolySymbol:
    """Polynomial in (x, y) with exact complex-rational coefficients.

    Coefficients are stored as (Fraction, Fraction) real/imaginary pairs, so
    sums, products, derivatives, and star products of symbols built from ints,
    Fractions, floats, or complex numbers are computed without rounding and
    compare with ``==`` exactly.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        table = {}
        for key, val in (coeffs or {}).items():
            kx, ky = int(key[0]), int(key[1])
            if kx < 0 or ky < 0:
                raise ValueError(f"negative exponent in {key}")
            pair = _to_frac_pair(val)
            if pair != (0, 0):
                table[(kx, ky)] = pair
        self.coeffs = table

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, c) -> "PolySymbol":
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> "PolySymbol":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "PolySymbol":
        return cls({(0, 1): 1})

    # -- ring operations ---------------------------------------------------
    def __add__(self, other) -> "PolySymbol":
        other = other if isinstance(other, PolySymbol) else PolySymbol.const(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = _cadd(out.get(k, (Fraction(0), Fraction(0))), v)
            if s == (0, 0):
                out.pop(k, None)
            else:
                out[k] = s
        res = PolySymbol()
        res.coeffs = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "PolySymbol":
        res = PolySymbol()
        res.coeffs = {k: (-v[0], -v[1]) for k, v in self.coeffs.items()}
        return res

    def __sub__(self, other) -> "PolySymbol":
        other = other if isinstance(other, PolySymbol) else PolySymbol.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "PolySymbol":
        return PolySymbol.const(other) - self

    def __mul__(self, other) -> "PolySymbol":
        if not isinstance(other, PolySymbol):
            scale = _to_frac_pair(other)
            res = PolySymbol()
            res.coeffs = {k: _cmul(v, scale) for k, v in self.coeffs.items()
                          if _cmul(v, scale) != (0, 0)}
            return res
        out: dict = {}
        for (ax, ay), av in self.coeffs.items():
            for (bx, by), bv in other.coeffs.items():
                k = (ax + bx, ay + by)
                s = _cadd(out.get(k, (Fraction(0), Fraction(0))), _cmul(av, bv))
                out[k] = s
        res = PolySymbol()
        res.coeffs = {k: v for k, v in out.items() if v != (0, 0)}
        return res

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolySymbol):
            try:
                other = PolySymbol.const(other)
            except TypeError:
                return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    # -- calculus ----------------------------------------------------------
    def diff(self, axis: int) -> "PolySymbol":
        """Partial derivative: axis 0 -> d/dx, axis 1 -> d/dy."""
        out = {}
        for (kx, ky), v in self.coeffs.items():
            k = kx if axis == 0 else ky
            if k == 0:
                continue
            key = (kx - 1, ky) if axis == 0 else (kx, ky - 1)
            out[key] = (v[0] * k, v[1] * k)
        res = PolySymbol()
        res.coeffs = out
        return res

    # -- inspection ----------------------------------------------------------
    @property
    def total_degree(self) -> int:
        return max((kx + ky for kx, ky in self.coeffs), default=0)

    def coefficient(self, kx: int, ky: int) -> complex:
        v = self.coeffs.get((kx, ky))
        return complex(float(v[0]), float(v[1])) if v else 0j

    def as_dict(self) -> dict[tuple[int, int], complex]:
        return {k: complex(float(v[0]), float(v[1])) for k, v in self.coeffs.items()}

    def evaluate(self, x: complex, y: complex) -> complex:
        return sum(
            complex(float(v[0]), float(v[1])) * x**kx * y**ky
            for (kx, ky), v in self.coeffs.items()
        )

    def __repr__(self):
        if not self.coeffs:
            return "PolySymbol(0)"
        parts = []
        for (kx, ky), v in sorted(self.coeffs.items()):
            mono = "".join(s for s, k in (("x^%d" % kx, kx), ("y^%d" % ky, ky)) if k)
            parts.append(f"({float(v[0])}{float(v[1]):+}j){mono or '1'}")
        return "PolySymbol(" + " + ".join(parts) + ")"


def star_product(f: PolySymbol, g: PolySymbol, theta, order: int | None = None) -> PolySymbol:
    """Moyal star product f * g to the given derivative order.

    Term n carries (1/n!)(i theta/2)^n and sums eps-contracted n-th derivatives:

        sum_k C(n,k) (-1)^(n-k) (dx^k dy^(n-k) f) (dx^(n-k) dy^k g).

    For polynomials every term with n beyond min(deg f, deg g) vanishes, so
    ``order=None`` (the default) computes the exact star product.  All
    arithmetic is exact complex-rational.
    """
    if order is None:
        order = min(f.total_degree, g.total_degree)
    elif order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    th = _to_frac_pair(theta)
    half_th = _cmul(th, (Fraction(1, 2), Fraction(0)))

    # dx^i dy^j caches, filled on demand
    df: dict[tuple[int, int], PolySymbol] = {(0, 0): f}
    dg: dict[tuple[int, int], PolySymbol] = {(0, 0): g}

    def deriv(cache, i, j):
        if (i, j) not in cache:
            if i > 0:
                cache[(i, j)] = deriv(cache, i - 1, j).diff(0)
            else:
                cache[(i, j)] = deriv(cache, i, j - 1).diff(1)
        return cache[(i, j)]

    total = PolySymbol()
    power = (Fraction(1), Fraction(0))  # (theta/2)^n, updated per term
    for n in range(order + 1):
        if n > 0:
            power = _cmul(power, half_th)
        fact = math.factorial(n)
        pref = _cmul(_I_POWERS[n % 4], (power[0] / fact, power[1] / fact))
        term = PolySymbol()
        for k in range(n + 1):
            sign = 1 if (n - k) % 2 == 0 else -1
            piece = deriv(df, k, n - k) * deriv(dg, n - k, k)
            term = term + piece * (sign * math.comb(n, k))
        total = total + term * pref
    return total


def star_first_order(f: PolySymbol, g: PolySymbol, theta) -> PolySymbol:
    """First-order star truncation f g + (i theta/2)(dx f dy g - dy f dx g).

    Exact (equal to the full star product) whenever f is affine, because every
    higher term differentiates f at least twice.
    """
    th = _to_frac_pair(theta)
    bracket = f.diff(0) * g.diff(1) - f.diff(1) * g.diff(0)
    pref = _cmul(_I_POWERS[1], _cmul(th, (Fraction(1, 2), Fraction(0))))
    return f * g + bracket * pref


def moyal_bracket(f: PolySymbol, g: PolySymbol, theta, order: int | None = None) -> PolySymbol:
    """f * g - g * f (exact by default)."""
    return star_product(f, g, theta, order) - star_product(g, f, theta, order)
