import math

import numpy as np
import pytest

from ellf4.beta_integrals.elliptic import BetaParams, beta_catalog, beta_integrand
from ellf4.beta_integrals.limits import edge_integrand, edge_prefactor
from ellf4.errors import DomainError, NoConvergence
from ellf4.quadrature import (
    GAMMA_OF_C_OVER_Z,
    GAMMA_OF_CZ,
    CircleContour,
    Pole,
    PoleCatalog,
    PoleFactor,
    QuadratureConfig,
    gamma_pole_catalog,
    integrate_circle,
    residue_numeric,
    select_radius,
    separation_ratio,
)
from ellf4.series import PhiSeriesSpec, sum_phi
from ellf4.special_functions import EllipticBase, qpoch_inf
from oracles import rel_err, trapezoid


def catalog(inward_mod, outward_mod):
    return PoleCatalog((Pole(complex(inward_mod), "in"),), (Pole(complex(outward_mod), "out"),))


@pytest.fixture
def e0_point():
    base = EllipticBase(0.1, 0.15)
    params = BetaParams.balanced([0.5, 0.4 + 0.2j, -0.3, 0.6j, 0.45], base)
    return params, base


class TestConfig:
    def test_contour_radius_positive(self):
        with pytest.raises(DomainError):
            CircleContour(0.0)

    @pytest.mark.parametrize("kwargs", [dict(n_start=8), dict(n_start=48), dict(n_start=64, n_max=32), dict(rel_tol=0)])
    def test_invalid_config(self, kwargs):
        with pytest.raises(DomainError):
            QuadratureConfig(**kwargs)


class TestIntegrateCircle:
    @pytest.mark.parametrize("radius", [0.3, 1.0, 2.5])
    def test_constant(self, radius):
        value, err, n = integrate_circle(lambda z: np.ones_like(z), radius)
        assert value == pytest.approx(1.0, abs=1e-15)

    @pytest.mark.parametrize("k", [-5, -1, 1, 3, 40])
    def test_monomials_vanish(self, k):
        res = integrate_circle(lambda z: z ** k, 0.8)
        assert abs(res.value) < 1e-14

    def test_geometric_series(self):
        a = 0.5 * np.exp(0.7j)
        res = integrate_circle(lambda z: 1 / (1 - a * z), 1.0)
        assert abs(res.value - 1) < 1e-14

    def test_matches_plain_trapezoid(self):
        f = lambda z: np.exp(z) / (1 - 0.3 / z)  # noqa: E731
        assert rel_err(integrate_circle(f, 1.0).value, trapezoid(f, 1.0, 512)) < 1e-13

    def test_pole_on_contour_does_not_converge(self):
        with pytest.raises(NoConvergence):
            integrate_circle(lambda z: 1 / (z - 1.0000001), 1.0, QuadratureConfig(16, 1 << 12, 1e-13))

    def test_deterministic(self, e0_point):
        params, base = e0_point
        f = beta_integrand(params.t, base)
        a = integrate_circle(f, 1.0)
        b = integrate_circle(f, 1.0)
        assert a.value == b.value and a.n_used == b.n_used


class TestSpectralConvergence:
    def test_error_decreases_geometrically(self, e0_point):
        params, base = e0_point
        f = beta_integrand(params.t, base)
        ref = integrate_circle(f, 1.0).value
        errs = []
        for n in (16, 32, 64, 128, 256, 512):
            w = np.exp(2j * np.pi * np.arange(n) / n)
            errs.append(abs(np.mean(f(w)) - ref))
        for a, b in zip(errs, errs[1:]):
            assert b < a
        assert errs[-1] < 1e-12 * abs(ref)

    def test_radius_independence(self, e0_point):
        params, base = e0_point
        cat = beta_catalog(params.t, base)
        lo, hi = cat.inward_max, cat.outward_min
        f = beta_integrand(params.t, base)
        r1, r2 = 0.6 * lo + 0.4 * hi, 0.3 * lo + 0.7 * hi
        assert rel_err(integrate_circle(f, r1).value, integrate_circle(f, r2).value) < 1e-12

    def test_real_parameters_give_real_value(self):
        base = EllipticBase(0.2, 0.3)
        params = BetaParams.balanced([0.5, 0.4, 0.3, 0.6, 0.45], base)
        res = integrate_circle(beta_integrand(params.t, base), 1.0)
        assert abs(res.value.imag) <= max(res.err_estimate, 1e-15 * abs(res.value))

    def test_reciprocal_sampling(self, e0_point):
        params, base = e0_point
        f = beta_integrand(params.t, base)
        n = 256
        w = np.exp(2j * np.pi * np.arange(n) / n)
        assert rel_err(np.mean(f(1 / w)), np.mean(f(w))) < 1e-13


class TestPoleCatalog:
    def test_gamma_tz_all_outward(self):
        base = EllipticBase(0.1, 0.2)
        cat = gamma_pole_catalog([PoleFactor(0.5, GAMMA_OF_CZ)], base, 1.0)
        assert not cat.inward
        assert cat.outward and min(abs(p.location) for p in cat.outward) == pytest.approx(2.0)

    def test_gamma_t_over_z_all_inward(self):
        base = EllipticBase(0.1, 0.2)
        cat = gamma_pole_catalog([PoleFactor(0.5, GAMMA_OF_C_OVER_Z)], base, 1.0)
        assert not cat.outward
        assert all(abs(p.location) <= 0.5 + 1e-15 for p in cat.inward)

    def test_retention_window(self):
        base = EllipticBase(0.1, 0.2)
        cat = gamma_pole_catalog([PoleFactor(0.5, GAMMA_OF_C_OVER_Z)], base, 1.0)
        mods = sorted(abs(p.location) for p in cat.inward)
        assert mods[-1] == pytest.approx(0.5)
        assert all(m >= 0.25 for m in mods)

    def test_e0_integrand_separates_at_unit_radius(self, e0_point):
        params, base = e0_point
        cat = beta_catalog(params.t, base)
        assert cat.inward_max < 1 < cat.outward_min
        assert separation_ratio(cat) > 1


class TestSelectRadius:
    def test_geometric_mean(self):
        assert select_radius(catalog(0.5, 2.0)) == pytest.approx(1.0)

    def test_close_families(self):
        assert select_radius(catalog(0.9, 1.05)) == pytest.approx(math.sqrt(0.945))
        assert select_radius(lambda r: catalog(0.9, 1.05)) == pytest.approx(0.972, abs=5e-4)

    def test_crossed_families(self):
        assert select_radius(catalog(1.2, 0.8)) is None


class TestResidue:
    def test_simple_pole(self):
        assert abs(residue_numeric(lambda z: 1 / (z - 0.3), 0.3, 0.1) - 1) < 1e-14

    def test_cauchy(self):
        a = 0.3
        assert abs(residue_numeric(lambda z: z ** 2 / (z - a), a, 0.1) - a ** 2) < 1e-14

    def test_radius_positive(self):
        with pytest.raises(DomainError):
            residue_numeric(lambda z: 1 / z, 0.0, 0.0)

    @pytest.mark.parametrize("k", [0, 1, 2])
    def test_edge_integrand_residues_are_series_terms(self, k):
        # residues at z = q^-k / t1 of the one-parameter edge integrand give
        # the terms of its 2phi1 representation
        b, t1, u, q = 0.3, 0.12, 0.6, 0.2
        f = edge_integrand(b, t1, [u], [], q)
        pre = edge_prefactor(b, t1, [u], [], q)
        x = q ** -k / t1
        res = residue_numeric(lambda z: f(z) / z, x, 0.05 * x)
        series_pre = qpoch_inf(b * u * t1, q) * qpoch_inf(q * b * b, q) * qpoch_inf(b * b, q) / qpoch_inf(q * b, q)
        terms = sum_phi(PhiSeriesSpec([t1 * u, q / b], [b * u * t1], q, b * b), keep_terms=True).terms
        assert rel_err(-pre * res, series_pre * terms[k]) < 1e-12
