"""Two-parameter fractional Fourier transform and Mehler kernels.

The rotation parameter theta is a bicomplex number acting channelwise.  Two
regimes are admitted: ``unit_torus`` (both channel values on the unit circle,
excluding the four points where a channel hits +1 or -1, i.e. theta in
{+1, -1, +ij, -ij}) and ``interior`` (both channel moduli < 1, zero channels
allowed - a collapsed channel simply transforms trivially).

On basis vectors the transform scales psi_n by theta**n, so the coefficient
map c_n -> theta**n c_n is the primary data path.  The equivalent integral
form uses the Gaussian kernel

    (c_0 / sqrt(1 - theta**2)) exp(-sigma (x - theta y)**2 / (1 - theta**2)),

whose real decay rate in x is exactly sigma/2 on the unit torus and faster
inside it, so the quadrature rule always carries gamma = sigma/2 with the
residual folded in.  The kernel equals c_0 exp(-sigma x**2) times the closed
Mehler sum, which is how the series oracle checks it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .bicomplex import (
    Bicomplex,
    ONE,
    as_bicomplex,
    conj_star,
    exp as bc_exp,
    inverse as bc_inverse,
    sqrt_principal,
)
from .bargmann import HermiteCoeffVector
from .errors import DomainError, ExcludedParameterError
from .hermite import hermite_sigma, hermite_sigma_bc, hermite_norm_sq
from .quadrature import DEFAULT_ORDER, gauss_hermite, integrate_real, normalization_c

__all__ = [
    "ThetaParam",
    "frft_kernel",
    "frft_apply",
    "frft_coefficients",
    "frft_inverse",
    "mehler_closed",
    "mehler_series",
    "mehler_bilinear_bc",
    "mehler_bilinear_series",
    "ck_frft_kernel",
    "gaussian_integral_closed",
]

#: how close a channel value may come to +1 or -1 before the parameter is
#: rejected as excluded
EXCLUSION_TOL = 1e-9

_UNIT_TOL = 1e-12


def _check_not_excluded(theta: Bicomplex) -> None:
    for name, v in (("alpha", theta.alpha), ("beta", theta.beta)):
        if abs(v - 1.0) <= EXCLUSION_TOL or abs(v + 1.0) <= EXCLUSION_TOL:
            raise ExcludedParameterError(
                f"theta {name} channel within {EXCLUSION_TOL} of +/-1; the rotation is singular there"
            )


@dataclass(frozen=True)
class ThetaParam:
    """Validated rotation parameter.

    mode="unit_torus": both channel moduli equal 1 (tolerance 1e-12) and no
    channel sits within EXCLUSION_TOL of +1 or -1.
    mode="interior": both channel moduli < 1; null channels are fine.
    """

    theta: Bicomplex
    mode: str = "unit_torus"

    def __post_init__(self):
        th = as_bicomplex(self.theta)
        object.__setattr__(self, "theta", th)
        if self.mode == "unit_torus":
            for name, v in (("alpha", th.alpha), ("beta", th.beta)):
                if abs(abs(v) - 1.0) > _UNIT_TOL:
                    raise ExcludedParameterError(
                        f"theta {name} channel modulus {abs(v)!r} is not on the unit circle"
                    )
            _check_not_excluded(th)
        elif self.mode == "interior":
            if max(abs(th.alpha), abs(th.beta)) >= 1.0:
                raise ExcludedParameterError("interior theta needs both channel moduli < 1")
        else:
            raise ValueError(f"unknown mode {self.mode!r}")

    @classmethod
    def from_phases(cls, phi1: float, phi2: float) -> "ThetaParam":
        """Unit-torus parameter exp(i phi1) e+ + exp(i phi2) e-."""
        return cls(Bicomplex.from_channels(np.exp(1j * phi1), np.exp(1j * phi2)))

    @classmethod
    def interior(cls, theta) -> "ThetaParam":
        return cls(as_bicomplex(theta), mode="interior")


def _one_minus_sq(theta: Bicomplex) -> Bicomplex:
    pd = ONE - theta * theta
    if pd.is_null(EXCLUSION_TOL):
        raise ExcludedParameterError("1 - theta**2 is a zero divisor; theta is excluded")
    return pd


def frft_kernel(sigma: float, theta: ThetaParam, x, y) -> Bicomplex:
    """Gaussian rotation kernel at real points ``x``, ``y``."""
    if not sigma > 0:
        raise ValueError("sigma must be positive")
    th = theta.theta
    pd = _one_minus_sq(th)
    pref = normalization_c(0, sigma) * bc_inverse(sqrt_principal(pd))
    S = sigma * bc_inverse(pd)
    D = x - th * y
    return pref * bc_exp(-(S * (D * D)))


def frft_coefficients(psi: HermiteCoeffVector, theta: ThetaParam) -> HermiteCoeffVector:
    """Diagonal coefficient map c_n -> theta**n c_n."""
    th = theta.theta
    power = ONE
    out = [psi.coeffs[0]]
    for c in psi.coeffs[1:]:
        power = power * th
        out.append(power * c)
    return HermiteCoeffVector(sigma=psi.sigma, coeffs=tuple(out))


def frft_apply(
    psi,
    theta: ThetaParam,
    y: float,
    *,
    sigma: float | None = None,
    order: int = DEFAULT_ORDER,
    vectorized: bool = True,
) -> Bicomplex:
    """Transform ``psi`` and evaluate at ``y``.

    A HermiteCoeffVector goes through the exact coefficient path.  A callable
    is integrated against the kernel with rule weight sigma/2 and the
    residual exp(+(sigma/2) x**2) folded in; ``sigma`` is then required.
    """
    if isinstance(psi, HermiteCoeffVector):
        return frft_coefficients(psi, theta).evaluate(y)
    if sigma is None:
        raise TypeError("sigma is required when psi is a callable")
    if not sigma > 0:
        raise ValueError("sigma must be positive")
    th = theta.theta
    pd = _one_minus_sq(th)
    pref = normalization_c(0, sigma) * bc_inverse(sqrt_principal(pd))
    S = sigma * bc_inverse(pd)
    rule = gauss_hermite(order, sigma / 2.0)
    thy = th * y

    def integrand(x):
        D = x - thy
        return bc_exp(-(S * (D * D)) + (0.5 * sigma) * x**2) * as_bicomplex(psi(x))

    val = integrate_real(integrand, rule, vectorized=vectorized)
    return pref * val


def frft_inverse(
    psi,
    theta: ThetaParam,
    x: float,
    *,
    sigma: float | None = None,
    order: int = DEFAULT_ORDER,
    vectorized: bool = True,
) -> Bicomplex:
    """Apply the rotation by conj_star(theta); inverts frft_apply on the torus."""
    if theta.mode != "unit_torus":
        raise ExcludedParameterError("inversion by conjugate rotation needs unit-torus theta")
    inv = ThetaParam(conj_star(theta.theta), mode=theta.mode)
    return frft_apply(psi, inv, x, sigma=sigma, order=order, vectorized=vectorized)


def _mehler_guard(theta: Bicomplex) -> Bicomplex:
    th = as_bicomplex(theta)
    _check_not_excluded(th)
    if max(abs(th.alpha), abs(th.beta)) > 1.0 + _UNIT_TOL:
        raise ValueError("Mehler kernel needs channel moduli <= 1")
    return th


def mehler_closed(sigma: float, theta, x, y) -> Bicomplex:
    """Closed Mehler sum (1-theta**2)**(-1/2) exp((-sigma theta**2 (x**2+y**2)
    + 2 sigma theta x y) / (1-theta**2)) at real points."""
    if not sigma > 0:
        raise ValueError("sigma must be positive")
    th = _mehler_guard(theta)
    pd = _one_minus_sq(th)
    inv_pd = bc_inverse(pd)
    expo = (-(sigma) * (th * th) * (x * x + y * y) + (2.0 * sigma * x * y) * th) * inv_pd
    return bc_inverse(sqrt_principal(pd)) * bc_exp(expo)


def mehler_series(sigma: float, theta, x, y, n_terms: int = 60) -> Bicomplex:
    """Partial Mehler sum sum_n theta**n H_n(x) H_n(y) / (2**n sigma**n n!)."""
    if not sigma > 0:
        raise ValueError("sigma must be positive")
    th = _mehler_guard(theta)
    acc = ONE
    power = ONE
    for n in range(1, n_terms):
        power = power * th
        acc = acc + power * (
            hermite_sigma(n, sigma, x) * hermite_sigma(n, sigma, y) / hermite_norm_sq(n, sigma)
        )
    return acc


def mehler_bilinear_bc(sigma: float, theta, Z: Bicomplex, y) -> Bicomplex:
    """Closed Mehler sum with the first argument bicomplex."""
    if not sigma > 0:
        raise ValueError("sigma must be positive")
    th = _mehler_guard(theta)
    Z = as_bicomplex(Z)
    pd = _one_minus_sq(th)
    inv_pd = bc_inverse(pd)
    expo = (-(sigma) * (th * th) * (Z * Z + y * y) + (2.0 * sigma * y) * (th * Z)) * inv_pd
    return bc_inverse(sqrt_principal(pd)) * bc_exp(expo)


def mehler_bilinear_series(sigma: float, theta, Z: Bicomplex, y, n_terms: int = 60) -> Bicomplex:
    """Series oracle for :func:`mehler_bilinear_bc`."""
    if not sigma > 0:
        raise ValueError("sigma must be positive")
    th = _mehler_guard(theta)
    Z = as_bicomplex(Z)
    acc = ONE
    power = ONE
    for n in range(1, n_terms):
        power = power * th
        acc = acc + (power * hermite_sigma_bc(n, sigma, Z)) * (
            hermite_sigma(n, sigma, y) / hermite_norm_sq(n, sigma)
        )
    return acc


def ck_frft_kernel(sigma: float, theta: ThetaParam, x, Z: Bicomplex) -> Bicomplex:
    """Kernel with the output argument continued off the real line.

    Restricting Z to a real y recovers frft_kernel(sigma, theta, x, y); the
    whole expression equals c_0 exp(-sigma x**2) times the bilinear Mehler
    closed form.
    """
    if not sigma > 0:
        raise ValueError("sigma must be positive")
    th = theta.theta
    Z = as_bicomplex(Z)
    pd = _one_minus_sq(th)
    inv_pd = bc_inverse(pd)
    pref = normalization_c(0, sigma) * bc_inverse(sqrt_principal(pd))
    expo = (
        -(sigma) * (th * th) * (Z * Z) - (sigma * x * x) * ONE + (2.0 * sigma * x) * (th * Z)
    ) * inv_pd
    return pref * bc_exp(expo)


def gaussian_integral_closed(gamma: float, a: complex, b: complex, c: complex, d: complex) -> complex:
    """Closed planar Gaussian integral
    integral exp(-gamma |zeta|**2 + a zeta**2 + b conj(zeta)**2 + c zeta
                 + d conj(zeta)) dlambda(zeta)
    = pi / sqrt(gamma**2 - 4ab) * exp((a d**2 + b c**2 + gamma c d)
                                      / (gamma**2 - 4ab)).

    Convergence requires |Re(a + b)| < gamma; outside that the quadratic form
    is not negative definite and DomainError is raised.  The square root is
    the principal branch.
    """
    if not gamma > 0:
        raise ValueError("gamma must be positive")
    a, b, c, d = complex(a), complex(b), complex(c), complex(d)
    if abs((a + b).real) >= gamma:
        raise DomainError("requires |Re(a+b)| < gamma")
    disc = gamma * gamma - 4.0 * a * b
    return complex(
        math.pi / np.sqrt(disc) * np.exp((a * d * d + b * c * c + gamma * c * d) / disc)
    )
