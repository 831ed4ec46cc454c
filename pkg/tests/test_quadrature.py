import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from bctransforms import (
    Bicomplex,
    gauss_hermite,
    integrate_bicomplex,
    integrate_complex,
    integrate_real,
    normalization_c,
)
from bctransforms.errors import NonFiniteError
from bctransforms.quadrature import DEFAULT_BC_ORDER, DEFAULT_ORDER, QuadratureRule


def scalar(result):
    assert isinstance(result, Bicomplex)
    assert result.z2 == 0j
    return result.z1


class TestRuleConstruction:
    def test_order_one_is_midpoint(self):
        rule = gauss_hermite(1, 1.0)
        assert_allclose(rule.nodes, [0.0])
        assert_allclose(rule.weights, [math.sqrt(math.pi)])

    def test_symmetry_is_exact(self):
        for order in (2, 7, 64):
            rule = gauss_hermite(order, 1.0)
            assert_allclose(rule.nodes, -rule.nodes[::-1], rtol=0, atol=0)
            assert_allclose(rule.weights, rule.weights[::-1], rtol=0, atol=0)

    def test_gamma_scaling(self):
        base = gauss_hermite(16, 1.0)
        scaled = gauss_hermite(16, 4.0)
        assert_allclose(scaled.nodes, base.nodes / 2.0)
        assert_allclose(scaled.weights, base.weights / 2.0)

    def test_invalid_args(self):
        with pytest.raises(ValueError):
            gauss_hermite(0)
        with pytest.raises(ValueError):
            gauss_hermite(8, 0.0)
        with pytest.raises(ValueError):
            gauss_hermite(8, -1.0)

    def test_rule_arrays_read_only(self):
        rule = gauss_hermite(8, 2.0)
        with pytest.raises(ValueError):
            rule.nodes[0] = 0.0

    def test_defaults_exported(self):
        assert DEFAULT_ORDER == 64
        assert DEFAULT_BC_ORDER == 24


class TestRealIntegrals:
    @pytest.mark.parametrize("gamma", [1.0, 0.5, 3.25])
    def test_gaussian_mass(self, gamma):
        rule = gauss_hermite(32, gamma)
        got = scalar(integrate_real(lambda t: 1.0, rule))
        assert_allclose(got, math.sqrt(math.pi / gamma), rtol=1e-14)

    def test_even_moments_exact(self):
        # integral t**(2k) e^{-g t**2} dt = sqrt(pi/g) (2k-1)!! / (2g)**k
        gamma = 1.75
        rule = gauss_hermite(24, gamma)
        expect = math.sqrt(math.pi / gamma)
        for k in range(12):
            if k > 0:
                expect *= (2 * k - 1) / (2 * gamma)
            got = scalar(integrate_real(lambda t, k=k: t ** (2 * k), rule))
            assert_allclose(got, expect, rtol=1e-13)

    def test_odd_moments_vanish(self):
        rule = gauss_hermite(24, 1.0)
        for k in (1, 3, 9):
            got = scalar(integrate_real(lambda t, k=k: t**k, rule))
            assert abs(got) < 1e-14

    def test_polynomial_exactness_degree(self):
        # an n-point rule integrates degree 2n-1 exactly but not degree 2n
        rule = gauss_hermite(3, 1.0)
        got5 = scalar(integrate_real(lambda t: t**4, rule))
        assert_allclose(got5, 0.75 * math.sqrt(math.pi), rtol=1e-14)
        got6 = scalar(integrate_real(lambda t: t**6, rule))
        assert abs(got6 - 15 / 8 * math.sqrt(math.pi)) > 1e-3

    def test_vectorized_matches_loop(self):
        rule = gauss_hermite(20, 2.0)
        f = lambda t: np.cos(t) + t**2
        a = integrate_real(f, rule)
        b = integrate_real(f, rule, vectorized=True)
        assert_allclose(complex(a.z1), complex(b.z1), rtol=1e-14)

    def test_bicomplex_valued_integrand(self):
        rule = gauss_hermite(16, 1.0)
        out = integrate_real(lambda t: Bicomplex(t**2 + 0j, 1j + 0 * t), rule)
        assert_allclose(out.z1, 0.5 * math.sqrt(math.pi), rtol=1e-14)
        assert_allclose(out.z2, 1j * math.sqrt(math.pi), rtol=1e-14)

    def test_nonfinite_raises(self):
        rule = gauss_hermite(8, 1.0)
        with pytest.raises(NonFiniteError):
            integrate_real(lambda t: math.nan, rule)
        with pytest.raises(NonFiniteError):
            integrate_real(lambda t: np.exp(t) * np.inf, rule, vectorized=True)


class TestComplexIntegrals:
    def test_planar_mass(self):
        gamma = 2.5
        rule = gauss_hermite(20, gamma)
        got = scalar(integrate_complex(lambda xi: 1.0, rule, vectorized=True))
        assert_allclose(got, math.pi / gamma, rtol=1e-13)

    @pytest.mark.parametrize("n", [0, 1, 2, 5])
    def test_holomorphic_moment(self, n):
        # integral |xi|**(2n) e^{-g|xi|^2} dlambda = (pi/g) n! / g**n
        gamma = 1.5
        rule = gauss_hermite(24, gamma)
        got = scalar(
            integrate_complex(lambda xi: (xi * np.conj(xi)) ** n, rule, vectorized=True)
        )
        expect = math.pi / gamma * math.factorial(n) / gamma**n
        assert_allclose(got, expect, rtol=1e-12)

    def test_mixed_monomials_orthogonal(self):
        rule = gauss_hermite(24, 1.0)
        got = scalar(
            integrate_complex(lambda xi: xi**3 * np.conj(xi) ** 1, rule, vectorized=True)
        )
        assert abs(got) < 1e-13


class TestBicomplexIntegrals:
    def test_ring_mass(self):
        nu = 2.0
        rule = gauss_hermite(10, nu / 2.0)
        got = scalar(integrate_bicomplex(lambda Z: 1.0, nu, rule, vectorized=True))
        # quarter of the iterated planar mass, each channel carrying gamma=nu/2
        assert_allclose(got, (math.pi / (nu / 2.0)) ** 2 / 4.0, rtol=1e-12)
        assert_allclose(got * normalization_c("BC", nu), 1.0, rtol=1e-12)

    def test_norm_sq_moment(self):
        # E|Z|^2 under the channel Gaussians: |Z|^2 = (|a|^2+|b|^2)/2, each
        # channel contributes (pi/g)(1/g) relative to mass, g = nu/2
        nu = 3.0
        g = nu / 2.0
        rule = gauss_hermite(12, g)
        mass = scalar(integrate_bicomplex(lambda Z: 1.0, nu, rule, vectorized=True))
        mom = scalar(integrate_bicomplex(_normsq, nu, rule, vectorized=True))
        assert_allclose(mom / mass, 1.0 / g, rtol=1e-12)

    def test_gamma_mismatch_rejected(self):
        rule = gauss_hermite(8, 1.0)
        with pytest.raises(ValueError):
            integrate_bicomplex(lambda Z: 1.0, 3.0, rule)


def _normsq(Z):
    a, b = Z.alpha, Z.beta
    return ((a * np.conj(a)).real + (b * np.conj(b)).real) / 2.0


class TestNormalization:
    def test_values(self):
        assert_allclose(normalization_c(0, 2.0), math.sqrt(2.0 / math.pi))
        assert_allclose(normalization_c(1, 2.0), 2.0 / math.pi)
        assert_allclose(normalization_c(2, 2.0), (2.0 / math.pi) ** 2)
        assert normalization_c("BC", 2.0) == normalization_c(2, 2.0)

    def test_planar_constant_normalizes_mass(self):
        gamma = 1.25
        rule = gauss_hermite(16, gamma)
        mass = scalar(integrate_complex(lambda xi: 1.0, rule, vectorized=True))
        assert_allclose(normalization_c(1, gamma) * mass, 1.0, rtol=1e-13)

    def test_invalid(self):
        with pytest.raises(ValueError):
            normalization_c(0, 0.0)
        with pytest.raises(ValueError):
            normalization_c(3, 1.0)
        with pytest.raises(ValueError):
            normalization_c("XY", 1.0)


class TestRuleDataclass:
    def test_frozen(self):
        rule = gauss_hermite(4)
        with pytest.raises(AttributeError):
            rule.gamma = 2.0

    def test_fields(self):
        rule = QuadratureRule(gamma=1.0, nodes=np.zeros(1), weights=np.ones(1))
        assert rule.gamma == 1.0
