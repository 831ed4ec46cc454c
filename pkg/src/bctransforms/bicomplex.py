"""Bicomplex number arithmetic.

A bicomplex number is Z = z1 + j z2 with complex z1, z2 and a second
imaginary unit j that commutes with i (ij = ji, j**2 = -1).  The ring is
not a field: it contains the zero divisors lying on the null cone.

The pair of idempotents

    e+ = (1 + ij)/2,    e- = (1 - ij)/2

splits the algebra into two complex channels,

    Z = alpha e+ + beta e-,    alpha = z1 - i z2,  beta = z1 + i z2,

and every product, power and transcendental function acts channelwise.
All multiplicative operations below route through that decomposition;
the canonical stored form stays (z1, z2).

Components may be plain scalars or equally shaped numpy arrays.  Every
operation broadcasts elementwise, which the quadrature code relies on to
evaluate integrands on whole node grids at once.  Instances are immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Number
from typing import Union

import numpy as np

from .errors import BranchCutError, NullConeError

__all__ = [
    "Bicomplex",
    "IdempotentPair",
    "as_bicomplex",
    "to_idempotent",
    "from_idempotent",
    "add",
    "sub",
    "neg",
    "mul",
    "conj_dagger",
    "conj_tilde",
    "conj_star",
    "norm",
    "exp",
    "pow",
    "sqrt_principal",
    "inverse",
    "is_null_cone",
    "bc_inner",
    "NULL_TOL",
    "ZERO",
    "ONE",
    "I",
    "J",
    "IJ",
    "E_PLUS",
    "E_MINUS",
]

#: absolute tolerance below which a channel modulus counts as a zero divisor
NULL_TOL = 1e-12

Scalar = Union[int, float, complex]


class Bicomplex:
    """Immutable bicomplex value z1 + j z2.

    Parameters
    ----------
    z1, z2 : complex scalars or equally shaped complex ndarrays
        The two complex components in the canonical (1, j) basis.
    """

    __slots__ = ("z1", "z2")

    # keep numpy from absorbing us into object arrays; binary ops with
    # ndarrays must dispatch to the reflected methods below
    __array_ufunc__ = None

    def __init__(self, z1: Scalar | np.ndarray = 0j, z2: Scalar | np.ndarray = 0j):
        object.__setattr__(self, "z1", z1)
        object.__setattr__(self, "z2", z2)

    def __setattr__(self, name, value):
        raise AttributeError("Bicomplex values are immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_reals(cls, x1: float, y1: float, x2: float, y2: float) -> "Bicomplex":
        """Build from the four real coordinates (x1, y1, x2, y2)."""
        return cls(complex(x1, y1), complex(x2, y2))

    @classmethod
    def from_complex(cls, z: Scalar | np.ndarray) -> "Bicomplex":
        """Embed a complex number as z + j*0."""
        return cls(z, np.zeros_like(z) if isinstance(z, np.ndarray) else 0j)

    @classmethod
    def from_channels(cls, alpha, beta) -> "Bicomplex":
        """Build from the idempotent channel values (alpha, beta)."""
        return cls((alpha + beta) / 2, 1j * (alpha - beta) / 2)

    @classmethod
    def from_json(cls, data) -> "Bicomplex":
        """Decode the wire form [x1, y1, x2, y2]."""
        x1, y1, x2, y2 = (float(v) for v in data)
        return cls.from_reals(x1, y1, x2, y2)

    # -- coordinates ---------------------------------------------------

    @property
    def x1(self):
        return np.real(self.z1) if isinstance(self.z1, np.ndarray) else self.z1.real

    @property
    def y1(self):
        return np.imag(self.z1) if isinstance(self.z1, np.ndarray) else self.z1.imag

    @property
    def x2(self):
        return np.real(self.z2) if isinstance(self.z2, np.ndarray) else self.z2.real

    @property
    def y2(self):
        return np.imag(self.z2) if isinstance(self.z2, np.ndarray) else self.z2.imag

    @property
    def alpha(self):
        """e+ channel value z1 - i z2."""
        return self.z1 - 1j * self.z2

    @property
    def beta(self):
        """e- channel value z1 + i z2."""
        return self.z1 + 1j * self.z2

    def to_json(self) -> list[float]:
        """Encode as [x1, y1, x2, y2]."""
        if isinstance(self.z1, np.ndarray) or isinstance(self.z2, np.ndarray):
            raise TypeError("array-valued Bicomplex cannot be JSON-encoded")
        return [float(self.x1), float(self.y1), float(self.x2), float(self.y2)]

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Bicomplex):
            return Bicomplex(self.z1 + other.z1, self.z2 + other.z2)
        if isinstance(other, (Number, np.ndarray)):
            return Bicomplex(self.z1 + other, self.z2 + 0 * other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Bicomplex):
            return Bicomplex(self.z1 - other.z1, self.z2 - other.z2)
        if isinstance(other, (Number, np.ndarray)):
            return Bicomplex(self.z1 - other, self.z2 - 0 * other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return Bicomplex(-self.z1, -self.z2)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Bicomplex):
            return Bicomplex.from_channels(self.alpha * other.alpha, self.beta * other.beta)
        if isinstance(other, (Number, np.ndarray)):
            return Bicomplex(self.z1 * other, self.z2 * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Bicomplex):
            return self * inverse(other)
        if isinstance(other, (Number, np.ndarray)):
            return Bicomplex(self.z1 / other, self.z2 / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (Number, np.ndarray)):
            return inverse(self) * other
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, (int, np.integer)):
            return NotImplemented
        if n < 0:
            return inverse(self) ** (-n)
        a, b = self.alpha, self.beta
        return Bicomplex.from_channels(a**n, b**n)

    def __abs__(self) -> float:
        return norm(self)

    def __eq__(self, other):
        if not isinstance(other, Bicomplex):
            return NotImplemented
        return bool(np.array_equal(self.z1, other.z1) and np.array_equal(self.z2, other.z2))

    def __repr__(self):
        return f"Bicomplex({self.z1!r}, {self.z2!r})"

    # -- predicates ----------------------------------------------------

    def is_null(self, tol: float = NULL_TOL) -> bool:
        """True when the value lies within ``tol`` of the null cone."""
        return bool(min(abs(self.alpha), abs(self.beta)) <= tol)


@dataclass(frozen=True)
class IdempotentPair:
    """The two channel values (alpha, beta) of a bicomplex number."""

    alpha: complex
    beta: complex

    def __mul__(self, other: "IdempotentPair") -> "IdempotentPair":
        return IdempotentPair(self.alpha * other.alpha, self.beta * other.beta)

    def to_bicomplex(self) -> Bicomplex:
        return Bicomplex.from_channels(self.alpha, self.beta)

    def is_null(self, tol: float = NULL_TOL) -> bool:
        return bool(min(abs(self.alpha), abs(self.beta)) <= tol)

    def to_json(self) -> dict:
        return {
            "alpha": [self.alpha.real, self.alpha.imag],
            "beta": [self.beta.real, self.beta.imag],
        }

    @classmethod
    def from_json(cls, data: dict) -> "IdempotentPair":
        a = data["alpha"]
        b = data["beta"]
        return cls(complex(a[0], a[1]), complex(b[0], b[1]))


def as_bicomplex(value) -> Bicomplex:
    """Coerce a scalar, complex ndarray or Bicomplex to Bicomplex."""
    if isinstance(value, Bicomplex):
        return value
    if isinstance(value, np.ndarray):
        return Bicomplex(value.astype(complex, copy=False), np.zeros_like(value, dtype=complex))
    if isinstance(value, Number):
        return Bicomplex(complex(value), 0j)
    raise TypeError(f"cannot interpret {type(value).__name__} as Bicomplex")


# -- contract surface: named operations --------------------------------


def to_idempotent(Z: Bicomplex) -> IdempotentPair:
    """Channel decomposition Z = alpha e+ + beta e-."""
    return IdempotentPair(Z.alpha, Z.beta)


def from_idempotent(pair: IdempotentPair) -> Bicomplex:
    """Inverse of :func:`to_idempotent`."""
    return Bicomplex.from_channels(pair.alpha, pair.beta)


def add(Z: Bicomplex, W: Bicomplex) -> Bicomplex:
    return Z + W


def sub(Z: Bicomplex, W: Bicomplex) -> Bicomplex:
    return Z - W


def neg(Z: Bicomplex) -> Bicomplex:
    return -Z


def mul(Z: Bicomplex, W) -> Bicomplex:
    """Bicomplex product; accepts a scalar second operand."""
    return Z * W


def conj_dagger(Z: Bicomplex) -> Bicomplex:
    """j-conjugation z1 - j z2; swaps the channels."""
    return Bicomplex(Z.z1, -Z.z2)


def conj_tilde(Z: Bicomplex) -> Bicomplex:
    """i-conjugation conj(z1) + j conj(z2); conjugate-swaps the channels."""
    return Bicomplex(np.conjugate(Z.z1), np.conjugate(Z.z2))


def conj_star(Z: Bicomplex) -> Bicomplex:
    """Composite conjugation conj(z1) - j conj(z2); conjugates each channel.

    This is the conjugation used by every inner product in the package.
    """
    return Bicomplex(np.conjugate(Z.z1), -np.conjugate(Z.z2))


def norm(Z: Bicomplex) -> float:
    """Euclidean norm sqrt(|z1|^2 + |z2|^2) of the four real coordinates."""
    if isinstance(Z.z1, np.ndarray) or isinstance(Z.z2, np.ndarray):
        return np.sqrt(np.abs(Z.z1) ** 2 + np.abs(Z.z2) ** 2)
    return math.hypot(Z.z1.real, Z.z1.imag, Z.z2.real, Z.z2.imag)


def exp(Z: Bicomplex) -> Bicomplex:
    """Channelwise exponential."""
    return Bicomplex.from_channels(np.exp(Z.alpha), np.exp(Z.beta))


def pow(Z: Bicomplex, n: int) -> Bicomplex:  # noqa: A001 - contract name
    """Integer power with channelwise alpha**n, beta**n; n must be >= 0."""
    if n < 0:
        raise ValueError("pow expects a nonnegative exponent; use inverse() first")
    return Z**n


def sqrt_principal(Z: Bicomplex) -> Bicomplex:
    """Channelwise principal square root.

    Raises
    ------
    BranchCutError
        If either channel value lies on the closed negative real axis,
        where no principal branch can be chosen.
    """
    a, b = Z.alpha, Z.beta
    for name, v in (("alpha", a), ("beta", b)):
        vals = np.atleast_1d(np.asarray(v, dtype=complex))
        if np.any((vals.imag == 0.0) & (vals.real <= 0.0)):
            raise BranchCutError(f"{name} channel lies on the branch cut (closed negative real axis)")
    ra = np.sqrt(a) if isinstance(a, np.ndarray) else np.sqrt(complex(a)).item()
    rb = np.sqrt(b) if isinstance(b, np.ndarray) else np.sqrt(complex(b)).item()
    return Bicomplex.from_channels(ra, rb)


def inverse(Z: Bicomplex, tol: float = NULL_TOL) -> Bicomplex:
    """Multiplicative inverse; defined exactly off the null cone.

    Raises
    ------
    NullConeError
        If min(|alpha|, |beta|) <= tol, i.e. Z is a zero divisor (or too
        close to one for a stable reciprocal).
    """
    a, b = Z.alpha, Z.beta
    amin = np.min(np.abs(a)) if isinstance(a, np.ndarray) else abs(a)
    bmin = np.min(np.abs(b)) if isinstance(b, np.ndarray) else abs(b)
    if min(amin, bmin) <= tol:
        raise NullConeError(f"value within {tol} of the null cone has no inverse")
    return Bicomplex.from_channels(1.0 / a, 1.0 / b)


def is_null_cone(Z: Bicomplex, tol: float = NULL_TOL) -> bool:
    """True when Z is a zero divisor up to absolute tolerance ``tol``."""
    return Z.is_null(tol)


def bc_inner(Z: Bicomplex, W: Bicomplex) -> Bicomplex:
    """Bicomplex pairing Z * conj_star(W), conjugate-linear in the second slot."""
    return Z * conj_star(W)


# -- distinguished constants -------------------------------------------

ZERO = Bicomplex(0j, 0j)
ONE = Bicomplex(1 + 0j, 0j)
I = Bicomplex(1j, 0j)
J = Bicomplex(0j, 1 + 0j)
IJ = Bicomplex(0j, 1j)
E_PLUS = Bicomplex(0.5 + 0j, 0.5j)
E_MINUS = Bicomplex(0.5 + 0j, -0.5j)
