"""Weighted function spaces: coefficient vectors, reproducing kernels, projections.

Two finite coefficient representations are used throughout the package:

* :class:`HermiteCoeffVector` - a polynomial on the line expanded in the
  orthonormal psi_n basis attached to the weight exp(-sigma x**2);
* :class:`MonomialCoeffVector` - a holomorphic polynomial on the bicomplex
  ring expanded in monomials Z**n, square-summable against exp(-nu |Z|**2)
  with squared monomial norms 2**n n! / nu**n.

Inner products are bicomplex-valued and conjugate-linear in the second slot.
The scalar ``norm_sq`` of a vector is the mean of the two channel norms,
equivalently the weighted sum of squared Euclidean moduli of the
coefficients; both transforms in this package preserve it channelwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .bicomplex import (
    Bicomplex,
    as_bicomplex,
    bc_inner,
    conj_star,
    exp as bc_exp,
    norm as bc_norm,
)
from .errors import DimensionMismatch
from .hermite import psi_values
from .quadrature import (
    DEFAULT_BC_ORDER,
    DEFAULT_ORDER,
    QuadratureRule,
    gauss_hermite,
    integrate_bicomplex,
    integrate_real,
    normalization_c,
)

__all__ = [
    "HermiteCoeffVector",
    "MonomialCoeffVector",
    "kernel_K_C",
    "kernel_K_BC",
    "monomial_norm_sq",
    "inner_L2sigma",
    "inner_H2nu",
    "project_P",
    "eval_monomial_series",
    "idempotent_split_F",
]

_LOG_NORM_DEGREE = 150


def _coerce_coeffs(coeffs: Sequence) -> tuple[Bicomplex, ...]:
    out = tuple(as_bicomplex(c) for c in coeffs)
    if not out:
        raise ValueError("coefficient vector must not be empty")
    return out


@dataclass(frozen=True)
class HermiteCoeffVector:
    """Finite expansion sum_n c_n psi_n in the weighted Hermite basis."""

    sigma: float
    coeffs: tuple[Bicomplex, ...]

    def __post_init__(self):
        if not self.sigma > 0:
            raise ValueError("sigma must be positive")
        object.__setattr__(self, "coeffs", _coerce_coeffs(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def basis(cls, n: int, sigma: float) -> "HermiteCoeffVector":
        """The unit vector psi_n."""
        coeffs = [Bicomplex(0j, 0j)] * n + [Bicomplex(1 + 0j, 0j)]
        return cls(sigma=sigma, coeffs=tuple(coeffs))

    def evaluate(self, x):
        """Value of the expansion at real ``x`` (scalar or ndarray)."""
        vals = psi_values(self.degree, self.sigma, x)
        acc = self.coeffs[0] * vals[0]
        for c, v in zip(self.coeffs[1:], vals[1:]):
            acc = acc + c * v
        return acc

    def norm_sq(self) -> float:
        """Sum of squared Euclidean moduli of the coefficients."""
        return float(sum(bc_norm(c) ** 2 for c in self.coeffs))

    def to_json(self) -> dict:
        return {"sigma": self.sigma, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "HermiteCoeffVector":
        if "sigma" not in data or "coeffs" not in data:
            raise DimensionMismatch("expected keys 'sigma' and 'coeffs'")
        return cls(
            sigma=float(data["sigma"]),
            coeffs=tuple(Bicomplex.from_json(c) for c in data["coeffs"]),
        )


@dataclass(frozen=True)
class MonomialCoeffVector:
    """Finite expansion sum_n A_n Z**n of a holomorphic polynomial."""

    nu: float
    coeffs: tuple[Bicomplex, ...]

    def __post_init__(self):
        if not self.nu > 0:
            raise ValueError("nu must be positive")
        object.__setattr__(self, "coeffs", _coerce_coeffs(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def basis(cls, n: int, nu: float) -> "MonomialCoeffVector":
        coeffs = [Bicomplex(0j, 0j)] * n + [Bicomplex(1 + 0j, 0j)]
        return cls(nu=nu, coeffs=tuple(coeffs))

    def evaluate(self, Z: Bicomplex) -> Bicomplex:
        return eval_monomial_series(self, Z)

    def norm_sq(self) -> float:
        """Weighted sum of squared coefficient moduli, weights 2**n n!/nu**n."""
        return float(
            sum(
                monomial_norm_sq(n, self.nu) * bc_norm(c) ** 2
                for n, c in enumerate(self.coeffs)
            )
        )

    def to_json(self) -> dict:
        return {"nu": self.nu, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "MonomialCoeffVector":
        if "nu" not in data or "coeffs" not in data:
            raise DimensionMismatch("expected keys 'nu' and 'coeffs'")
        return cls(
            nu=float(data["nu"]),
            coeffs=tuple(Bicomplex.from_json(c) for c in data["coeffs"]),
        )


def kernel_K_C(gamma: float, z: complex, w: complex) -> complex:
    """Classical planar reproducing kernel exp(gamma z conj(w))."""
    if not gamma > 0:
        raise ValueError("gamma must be positive")
    return np.exp(gamma * z * np.conjugate(w))


def kernel_K_BC(nu: float, Z: Bicomplex, W: Bicomplex) -> Bicomplex:
    """Bicomplex reproducing kernel exp((nu/2) Z W*)."""
    if not nu > 0:
        raise ValueError("nu must be positive")
    return bc_exp((0.5 * nu) * (as_bicomplex(Z) * conj_star(as_bicomplex(W))))


def monomial_norm_sq(n: int, nu: float) -> float:
    """Squared norm 2**n n! / nu**n of the monomial Z**n."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if not nu > 0:
        raise ValueError("nu must be positive")
    if n > _LOG_NORM_DEGREE:
        return math.exp(n * math.log(2.0 / nu) + math.lgamma(n + 1))
    return 2.0**n * math.factorial(n) / nu**n


def _pairwise_inner(f_coeffs, g_coeffs, weight=None) -> Bicomplex:
    acc = Bicomplex(0j, 0j)
    for n, (c, d) in enumerate(zip(f_coeffs, g_coeffs)):
        term = bc_inner(c, d)
        if weight is not None:
            term = weight(n) * term
        acc = acc + term
    return acc


def inner_L2sigma(
    f,
    g,
    sigma: float | None = None,
    *,
    order: int = DEFAULT_ORDER,
    vectorized: bool = False,
) -> Bicomplex:
    """Weighted-line inner product, conjugate-linear in ``g``.

    Coefficient vectors pair exactly as sum_n c_n (d_n)*.  If either side is
    a callable the product is integrated against the probability-normalized
    Gaussian; ``sigma`` must then be supplied (or be carried by the other
    operand).  Callables must broadcast over node arrays when
    ``vectorized=True``.
    """
    f_vec = isinstance(f, HermiteCoeffVector)
    g_vec = isinstance(g, HermiteCoeffVector)
    if f_vec and g_vec:
        if abs(f.sigma - g.sigma) > 1e-12:
            raise DimensionMismatch(f"sigma mismatch: {f.sigma} vs {g.sigma}")
        return _pairwise_inner(f.coeffs, g.coeffs)
    sig = sigma
    if sig is None:
        sig = f.sigma if f_vec else (g.sigma if g_vec else None)
    if sig is None:
        raise DimensionMismatch("sigma is required when both operands are callables")
    fe = f.evaluate if f_vec else f
    ge = g.evaluate if g_vec else g
    rule = gauss_hermite(order, sig)
    val = integrate_real(
        lambda x: as_bicomplex(fe(x)) * conj_star(as_bicomplex(ge(x))),
        rule,
        vectorized=vectorized,
    )
    return normalization_c(0, sig) * val


def inner_H2nu(
    f,
    g,
    nu: float | None = None,
    *,
    order: int = DEFAULT_BC_ORDER,
    vectorized: bool = False,
) -> Bicomplex:
    """Holomorphic-side inner product, conjugate-linear in ``g``.

    Coefficient vectors pair exactly with the monomial weights
    2**n n! / nu**n.  Callables are integrated against the normalized
    bicomplex Gaussian with a tensor rule of the given ``order``.
    """
    f_vec = isinstance(f, MonomialCoeffVector)
    g_vec = isinstance(g, MonomialCoeffVector)
    if f_vec and g_vec:
        if abs(f.nu - g.nu) > 1e-12:
            raise DimensionMismatch(f"nu mismatch: {f.nu} vs {g.nu}")
        return _pairwise_inner(f.coeffs, g.coeffs, weight=lambda n: monomial_norm_sq(n, f.nu))
    nv = nu
    if nv is None:
        nv = f.nu if f_vec else (g.nu if g_vec else None)
    if nv is None:
        raise DimensionMismatch("nu is required when both operands are callables")
    fe = f.evaluate if f_vec else f
    ge = g.evaluate if g_vec else g
    rule = gauss_hermite(order, nv / 2.0)
    val = integrate_bicomplex(
        lambda Z: as_bicomplex(fe(Z)) * conj_star(as_bicomplex(ge(Z))),
        nv,
        rule,
        vectorized=vectorized,
    )
    return normalization_c("BC", nv) * val


def project_P(
    f: Callable,
    nu: float,
    Z: Bicomplex,
    *,
    order: int = DEFAULT_BC_ORDER,
    vectorized: bool = False,
) -> Bicomplex:
    """Reproducing projection of ``f`` evaluated at ``Z``.

    Integrates kernel_K_BC(nu, Z, W) f(W) against the normalized bicomplex
    Gaussian in W.  Holomorphic polynomials are reproduced; components
    conjugate-holomorphic in W are annihilated.
    """
    Z = as_bicomplex(Z)
    rule = gauss_hermite(order, nu / 2.0)

    def integrand(W: Bicomplex) -> Bicomplex:
        return kernel_K_BC(nu, Z, W) * as_bicomplex(f(W))

    val = integrate_bicomplex(integrand, nu, rule, vectorized=vectorized)
    return normalization_c("BC", nu) * val


def eval_monomial_series(f: MonomialCoeffVector, Z: Bicomplex) -> Bicomplex:
    """Evaluate sum_n A_n Z**n by channelwise Horner recursion."""
    Z = as_bicomplex(Z)
    a_coeffs = [c.alpha for c in f.coeffs]
    b_coeffs = [c.beta for c in f.coeffs]
    za, zb = Z.alpha, Z.beta
    acc_a = a_coeffs[-1] + 0 * za
    acc_b = b_coeffs[-1] + 0 * zb
    for ca, cb in zip(a_coeffs[-2::-1], b_coeffs[-2::-1]):
        acc_a = acc_a * za + ca
        acc_b = acc_b * zb + cb
    return Bicomplex.from_channels(acc_a, acc_b)


def idempotent_split_F(f: MonomialCoeffVector) -> tuple[list[complex], list[complex]]:
    """Channel coefficient lists (alpha side, beta side) of a holomorphic vector."""
    return [c.alpha for c in f.coeffs], [c.beta for c in f.coeffs]
