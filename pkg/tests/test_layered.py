import math
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slabtherm.constants import C
from slabtherm.coremath import Permittivity, b1_hat
from slabtherm.layered import (
    SlabGeometry,
    alpha_hat,
    fresnel,
    g_halfspace_integrand,
    g_slab_integrand,
    halfspace_brace_hat,
    integrand_weights,
    scattering_alpha,
    slab_brace_hat,
    slab_reflection,
    slab_reflection_hat,
)
from slabtherm.quadrature import QuadratureSpec

OMEGA = 3.0e15
K0 = OMEGA / C
LAM = 1.0 / K0  # reduced wavelength c/omega
LOSSY = Permittivity(2.0, 0.1)


def test_geometry_validation():
    assert SlabGeometry(math.inf, 1e-6).halfspace
    assert not SlabGeometry(1e-3, 1e-6).halfspace
    for bad in [(-1.0, 1e-6), (1e-3, 0.0), (1e-3, math.inf), (math.nan, 1e-6)]:
        with pytest.raises(ValueError):
            SlabGeometry(*bad)


class TestFresnel:
    def test_eps4_normal_incidence(self):
        f = fresnel(0.0, OMEGA, Permittivity(4.0, 0.0))
        assert f.r_s == pytest.approx(1 / 3, abs=1e-15)
        assert f.r_p == pytest.approx(-1 / 3, abs=1e-15)
        assert f.t_s == pytest.approx(1 / 3, abs=1e-15)
        assert f.t_p == pytest.approx(2 / 3, abs=1e-15)

    @pytest.mark.parametrize("x", [0.0, 0.5, 2.0, 10.0])
    def test_no_interface(self, x):
        f = fresnel(x * K0, OMEGA, Permittivity(1.0, 0.0))
        assert f.r_s == 0 and f.r_p == 0
        assert f.t_s == pytest.approx(1.0, abs=1e-15) and f.t_p == pytest.approx(1.0, abs=1e-15)

    def test_zero_thickness_denominator(self):
        k = np.linspace(0, 5, 11) * K0
        f = fresnel(k, OMEGA, LOSSY, d=0.0)
        assert np.allclose(f.d_s, 1 - f.r_s**2, rtol=0, atol=1e-15)
        assert np.allclose(f.d_p, 1 - f.r_p**2, rtol=0, atol=1e-15)

    def test_halfspace_denominator_is_one(self):
        f = fresnel(2 * K0, OMEGA, LOSSY)
        assert f.d_s == 1 and f.d_p == 1


class TestSlabReflection:
    def test_zero_thickness(self):
        r_s, r_p = slab_reflection(np.linspace(0, 4, 9) * K0, OMEGA, LOSSY, 0.0)
        assert np.all(r_s == 0) and np.all(r_p == 0)

    def test_no_contrast(self):
        r_s, r_p = slab_reflection(np.linspace(0, 4, 9) * K0, OMEGA, Permittivity(1.0, 0.0), 3 * LAM)
        assert np.all(r_s == 0) and np.all(r_p == 0)

    @pytest.mark.parametrize("d_over_lam", [20.0, 60.0, 200.0])
    def test_thick_limit_within_round_trip_attenuation(self, d_over_lam):
        x = np.linspace(0.0, 6.0, 61)
        d = d_over_lam * LAM
        r_s, r_p = slab_reflection(x * K0, OMEGA, LOSSY, d)
        f = fresnel(x * K0, OMEGA, LOSSY)
        att = np.exp(-2 * b1_hat(x, LOSSY.re, LOSSY.im).imag * d_over_lam)
        # R + r = r e (1 - r^2)/(1 - r^2 e): geometric-series remainder, |e| = att
        for r, big_r in ((f.r_s, r_s), (f.r_p, r_p)):
            bound = np.abs(r * (1 - r * r)) / (1 - np.abs(r * r) * att) * att
            assert np.all(np.abs(big_r + r) <= bound * (1 + 1e-9) + 1e-15)
            assert np.all(bound <= 2.5 * att)

    def test_halfspace_is_minus_dielectric_side(self):
        f = fresnel(0.7 * K0, OMEGA, LOSSY)
        r_s, r_p = slab_reflection(0.7 * K0, OMEGA, LOSSY, math.inf)
        assert r_s == pytest.approx(-f.r_s, rel=1e-14)
        assert r_p == pytest.approx(-f.r_p, rel=1e-14)

    def test_passive(self):
        x = np.linspace(0, 0.999, 200)
        for d in (0.3, 2.0, 7.0):
            r_s, r_p = slab_reflection(x * K0, OMEGA, Permittivity(5.0, 0.4), d * LAM)
            assert np.all(np.abs(r_s) <= 1) and np.all(np.abs(r_p) <= 1)


class TestWeights:
    @pytest.mark.parametrize("x", [0.3, 1.5, 4.0])
    def test_vacuum(self, x):
        w = integrand_weights(x * K0, OMEGA, Permittivity(1.0, 0.0))
        b0sq = abs(1 - x * x)
        assert w.a_s == pytest.approx(1.0, rel=1e-14)
        assert w.a_plus == pytest.approx((x * x + b0sq) ** 2, rel=1e-14)

    def test_halfspace_weights(self):
        x = np.linspace(1.01, 8, 30)
        eps = Permittivity(3.0, 0.5)
        f = fresnel(x * K0, OMEGA, eps)
        b0 = np.sqrt(np.abs(1 - x**2))
        b1 = b1_hat(x, eps.re, eps.im)
        bare = integrand_weights(x * K0, OMEGA, eps, bare_s_weight=True)
        full = integrand_weights(x * K0, OMEGA, eps)
        assert np.allclose(bare.a_s, np.abs(f.t_s) ** 2, rtol=1e-13)
        assert np.allclose(full.a_s, abs(eps.value) * np.abs(f.t_s) ** 2, rtol=1e-13)
        a_plus = np.abs(f.t_p) ** 2 * (x**2 + np.abs(b1) ** 2) * (x**2 + b0**2) / abs(eps.value)
        assert np.allclose(full.a_plus, a_plus, rtol=1e-13)

    @settings(max_examples=100, deadline=None)
    @given(st.floats(0, 30), st.floats(1, 20), st.floats(0, 10), st.floats(0, 50))
    def test_a_plus_dominates(self, x, re, im, delta):
        w = integrand_weights(x * K0, OMEGA, Permittivity(re, im), delta * LAM)
        assert w.a_plus >= w.a_minus


class TestGIntegrands:
    K = np.linspace(1.001, 12, 300) * K0

    def test_lossless_finite_slab_is_exactly_zero(self):
        vals = g_slab_integrand(self.K, OMEGA, Permittivity(2.0, 0.0), 2e-3, LAM)
        assert np.all(vals == 0.0)

    def test_zero_thickness(self):
        assert np.all(g_slab_integrand(self.K, OMEGA, LOSSY, 0.0, LAM) == 0.0)

    def test_halfspace_vacuum(self):
        assert np.all(g_halfspace_integrand(self.K, OMEGA, Permittivity(1.0, 0.0), LAM) == 0.0)

    def test_halfspace_lossless_beyond_light_cone_of_medium(self):
        eps = Permittivity(2.0, 0.0)
        k = np.linspace(1.42, 10, 50) * K0
        assert np.all(g_halfspace_integrand(k, OMEGA, eps, LAM) == 0.0)
        k_inside = np.linspace(1.01, 1.4, 20) * K0
        assert np.all(g_halfspace_integrand(k_inside, OMEGA, eps, LAM) > 0)

    @pytest.mark.parametrize("eps", [LOSSY, Permittivity(10.0, 1.0), Permittivity(1.3, 4.0)])
    def test_largest_finite_thickness_matches_halfspace(self, eps):
        slab = g_slab_integrand(self.K, OMEGA, eps, sys.float_info.max, LAM)
        half = g_halfspace_integrand(self.K, OMEGA, eps, LAM)
        assert np.allclose(slab, half, rtol=1e-10, atol=0)

    def test_converges_to_halfspace_with_thickness(self):
        half = g_halfspace_integrand(self.K, OMEGA, LOSSY, LAM)
        prev = math.inf
        for d in (50, 100, 200, 400):
            dev = np.max(np.abs(g_slab_integrand(self.K, OMEGA, LOSSY, d * LAM, LAM) - half) / half)
            assert dev < prev
            prev = dev
        assert prev < 1e-10

    def test_propagating_range_rejected(self):
        with pytest.raises(ValueError):
            g_slab_integrand(0.5 * K0, OMEGA, LOSSY, LAM, LAM)
        with pytest.raises(ValueError):
            g_halfspace_integrand(K0, OMEGA, LOSSY, LAM)

    @settings(max_examples=150, deadline=None)
    @given(st.floats(1.0, 15.0), st.floats(0.0, 12.0), st.floats(1e-3, 100.0), st.floats(1e-4, 50.0))
    def test_nonnegative(self, re, im, delta, u_max):
        u = np.linspace(1e-6, u_max, 64)
        eps = complex(re, im)
        assert np.all(slab_brace_hat(u, eps, delta) >= -1e-14 * np.max(np.abs(halfspace_brace_hat(u, eps)) + 1))
        assert np.all(halfspace_brace_hat(u, eps) >= 0)


class TestClosureIdentity:
    """With the impedance-consistent s weight, brace/u = 2 Im[R_s + (2x^2 - 1) R_p]."""

    @pytest.mark.parametrize("eps, delta", [
        (2 + 0.1j, 5.0), (2 + 0.1j, math.inf), (10 + 1j, 0.3), (4 + 0.5j, 1.0), (1.2 + 3j, 20.0),
    ])
    def test_pointwise(self, eps, delta):
        u = np.linspace(1e-3, 20, 400)
        x2 = 1 + u * u
        b1 = b1_hat(np.sqrt(x2), eps.real, eps.imag)
        r_s, r_p = slab_reflection_hat(x2, 1j * u, b1, eps, delta)
        lhs = slab_brace_hat(u, eps, delta) / u
        rhs = 2 * (r_s + (2 * x2 - 1) * r_p).imag
        assert np.allclose(lhs, rhs, rtol=1e-10, atol=1e-14)

    def test_bare_weight_breaks_it(self):
        u = np.linspace(0.1, 3, 30)
        eps = 2 + 0.1j
        x2 = 1 + u * u
        b1 = b1_hat(np.sqrt(x2), eps.real, eps.imag)
        r_s, r_p = slab_reflection_hat(x2, 1j * u, b1, eps, math.inf)
        rhs = 2 * (r_s + (2 * x2 - 1) * r_p).imag
        lhs = halfspace_brace_hat(u, eps, bare_s_weight=True) / u
        assert not np.allclose(lhs, rhs, rtol=1e-3)


class TestAlpha:
    def test_vacuum(self):
        assert scattering_alpha(LAM, OMEGA, Permittivity(1.0, 0.0), 3 * LAM) == 1.0
        assert scattering_alpha(LAM, OMEGA, Permittivity(1.0, 0.0), math.inf) == 1.0

    def test_zero_thickness(self):
        assert scattering_alpha(LAM, OMEGA, LOSSY, 0.0) == 1.0

    def test_lossless_finite_slab_rejected(self):
        with pytest.raises(ValueError, match="Im eps > 0"):
            scattering_alpha(LAM, OMEGA, Permittivity(2.0, 0.0), 3 * LAM)

    def test_lossless_halfspace_allowed(self):
        assert scattering_alpha(LAM, OMEGA, Permittivity(2.0, 0.0), math.inf) > 0

    def test_golden(self, golden):
        for row in golden["alpha"]:
            delta = math.inf if row["delta"] is None else row["delta"]
            value, _ = alpha_hat(row["zeta"], complex(row["re"], row["im"]), delta)
            assert value == pytest.approx(row["value"], rel=1e-6), row

    def test_far_field_follows_asymptote(self):
        """Far away alpha - 1 tracks the leading reflected-wave term Im[R_s(0) e^{2i zeta}]/(2 zeta)."""
        eps = 2 + 0.1j
        for zeta in (200.0, 400.0, 1000.0):
            value, _ = alpha_hat(zeta, eps, 5.0)
            r_s, _ = slab_reflection_hat(np.array(1.0), np.array(1.0 + 0j), b1_hat(0.0, 2.0, 0.1), eps, 5.0)
            lead = (complex(r_s) * np.exp(2j * zeta)).imag / (2 * zeta)
            assert abs(value - 1 - lead) < 5.0 / zeta**2
            assert abs(value - 1) <= abs(complex(r_s)) / (2 * zeta) * (1 + 10 / zeta)

    @settings(max_examples=25, deadline=None)
    @given(st.floats(1.0, 12.0), st.floats(0.01, 5.0), st.floats(0.05, 20.0), st.floats(0.01, 50.0))
    def test_positive(self, re, im, zeta, delta):
        assert scattering_alpha(zeta * LAM, OMEGA, Permittivity(re, im), delta * LAM) > 0

    def test_input_validation(self):
        with pytest.raises(ValueError):
            scattering_alpha(0.0, OMEGA, LOSSY, LAM)
        with pytest.raises(ValueError):
            scattering_alpha(LAM, OMEGA, LOSSY, -1.0)

    def test_tolerance_is_honoured(self):
        loose, _ = alpha_hat(1.0, 2 + 0.1j, 5.0, QuadratureSpec(rel_tol=1e-5))
        tight, _ = alpha_hat(1.0, 2 + 0.1j, 5.0, QuadratureSpec(rel_tol=1e-12))
        assert loose == pytest.approx(tight, rel=1e-5)
