import cmath

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ellf4.errors import DomainError, NonConvergent, PoleError, TruncationBudgetExceeded
from ellf4.special_functions import (
    EllipticBase,
    TruncationPolicy,
    elliptic_gamma,
    pq_poch,
    qpoch_finite,
    qpoch_inf,
    riemann_theta_addition_check,
    riemann_theta_addition_sides,
    theta,
    truncation_length,
)
from oracles import double_product, finite_poch, gamma_direct, long_product, rel_err, theta_direct

def complex_in_disc(max_mod, min_mod=0.05):
    return st.builds(
        lambda r, phi: r * cmath.exp(1j * phi),
        st.floats(min_mod, max_mod),
        st.floats(0, 2 * np.pi),
    )


nomes = complex_in_disc(0.5)
# |x| in [0.3, 0.8] keeps x and pq/x off the pole lattice for |p|, |q| <= 0.5
gamma_args = complex_in_disc(0.8, 0.3)


class TestTypes:
    def test_base_rejects_unit_modulus(self):
        with pytest.raises(DomainError):
            EllipticBase(1.0, 0.2)
        with pytest.raises(DomainError):
            EllipticBase(0.2, -1.0)

    def test_base_rejects_bad_policy(self):
        with pytest.raises(DomainError):
            EllipticBase(0.1, 0.2, tol=0.0)
        with pytest.raises(DomainError):
            EllipticBase(0.1, 0.2, max_terms=0)

    def test_policy_invariants(self):
        with pytest.raises(DomainError):
            TruncationPolicy(tol=-1e-3)
        with pytest.raises(DomainError):
            TruncationPolicy(max_terms=0)

    def test_error_codes(self):
        assert NonConvergent.code == "NONCONVERGENT"
        assert TruncationBudgetExceeded.code == "TRUNCATION_BUDGET"
        assert PoleError.code == "POLE"
        assert DomainError.code == "DOMAIN"


class TestQpochFinite:
    def test_empty_product_is_exactly_one(self):
        assert qpoch_finite(3.7 - 2j, 0.9, 0) == 1

    def test_vanishing_first_factor(self):
        assert qpoch_finite(1.0, 0.5, 3) == 0

    def test_two_factor_value(self):
        # (1 - 0.3)(1 - 0.15)
        assert qpoch_finite(0.3, 0.5, 2) == pytest.approx(0.595, rel=1e-15)

    def test_negative_length_rejected(self):
        with pytest.raises(DomainError):
            qpoch_finite(0.3, 0.5, -1)

    @given(complex_in_disc(2.0), nomes, st.integers(0, 10), st.integers(0, 10))
    def test_concatenation(self, x, q, m, n):
        whole = qpoch_finite(x, q, m + n)
        split = qpoch_finite(x, q, m) * qpoch_finite(x * q ** m, q, n)
        assert abs(whole - split) <= 1e-12 * max(1.0, abs(whole))

    def test_vectorised(self):
        xs = np.array([0.1, 0.2 + 0.1j, -0.7])
        got = qpoch_finite(xs, 0.3, 5)
        assert got.shape == (3,)
        for x, g in zip(xs, got):
            assert g == pytest.approx(finite_poch(x, 0.3, 5), rel=1e-14)


class TestQpochInf:
    def test_zero_argument(self):
        assert qpoch_inf(0.0, 0.5) == 1

    def test_long_product_oracle(self):
        assert rel_err(qpoch_inf(0.2, 0.3), long_product(0.2, 0.3, 64)) < 1e-14

    @given(complex_in_disc(3.0), nomes)
    def test_factor_peeling(self, x, q):
        lhs = (1 - x) * qpoch_inf(x * q, q)
        rhs = qpoch_inf(x, q)
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))

    def test_q_itself(self):
        q = 0.35 + 0.2j
        assert rel_err(qpoch_inf(q, q), long_product(q, q, 80)) < 1e-14

    def test_unit_nome_rejected(self):
        with pytest.raises(NonConvergent):
            qpoch_inf(0.3, 1.0)

    def test_budget(self):
        with pytest.raises(TruncationBudgetExceeded):
            qpoch_inf(0.5, 0.9, TruncationPolicy(1e-16, 5))

    def test_error_estimate_is_small(self):
        value, err = qpoch_inf(0.4 + 0.2j, 0.45, return_error=True)
        assert 0 <= err < 1e-14
        assert rel_err(value, long_product(0.4 + 0.2j, 0.45, 200)) < 1e-14

    @pytest.mark.parametrize("tol", [1e-6, 1e-10, 1e-14])
    def test_longer_truncation_agrees_within_tol(self, tol):
        x, q = 0.7 - 0.3j, 0.5
        policy = TruncationPolicy(tol)
        n = truncation_length(abs(x), abs(q), policy)
        short = qpoch_inf(x, q, policy)
        assert rel_err(short, long_product(x, q, 4 * n)) <= 10 * tol


class TestPqPoch:
    def test_zero_argument(self, base):
        assert pq_poch(0.0, base) == 1

    @given(complex_in_disc(2.0), nomes, nomes)
    @settings(max_examples=40)
    def test_symmetric_in_nomes(self, x, p, q):
        a = pq_poch(x, EllipticBase(p, q))
        b = pq_poch(x, EllipticBase(q, p))
        assert abs(a - b) <= 1e-13 * max(1.0, abs(a))

    def test_double_product_oracle(self):
        got = pq_poch(0.1, EllipticBase(0.1, 0.2))
        assert rel_err(got, double_product(0.1, 0.1, 0.2, 40)) < 1e-14

    def test_error_estimate(self):
        value, err = pq_poch(0.6 + 0.5j, EllipticBase(0.3, 0.4j), return_error=True)
        assert err < 1e-14
        assert rel_err(value, double_product(0.6 + 0.5j, 0.3, 0.4j, 60)) < 1e-14


class TestTheta:
    def test_zero_at_one(self):
        assert theta(1.0, 0.3) == 0

    def test_reflection_symmetry(self):
        x, p = 0.4 + 0.1j, 0.2
        assert rel_err(theta(p / x, p), theta(x, p)) < 1e-15

    def test_minus_one_oracle(self):
        assert rel_err(theta(-1.0, 0.25), theta_direct(-1.0, 0.25)) < 1e-14

    def test_zero_argument_rejected(self):
        with pytest.raises(DomainError):
            theta(0.0, 0.3)

    @given(complex_in_disc(3.0, 0.1), nomes)
    def test_quasi_periodicity(self, x, p):
        # theta(px;p) = -theta(x;p)/x
        lhs = theta(p * x, p)
        rhs = -theta(x, p) / x
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))


class TestEllipticGamma:
    def test_reflection_example(self):
        base = EllipticBase(0.1, 0.2)
        assert abs(elliptic_gamma(0.5, base) * elliptic_gamma(base.pq / 0.5, base) - 1) < 1e-15

    def test_difference_example(self):
        base = EllipticBase(0.15, 0.3)
        x = 0.4
        lhs = elliptic_gamma(base.p * x, base)
        rhs = theta(x, base.q) * elliptic_gamma(x, base)
        assert rel_err(lhs, rhs) < 1e-14

    def test_value_at_square_root_of_pq(self):
        # Gamma(sqrt(pq))^2 = 1; the sign is +1 (regression value)
        base = EllipticBase(0.1, 0.2)
        g = elliptic_gamma(cmath.sqrt(base.pq), base)
        assert abs(g - 1) < 1e-15
        assert rel_err(g, gamma_direct(cmath.sqrt(0.02), 0.1, 0.2)) < 1e-14

    def test_direct_product_oracle(self):
        x = 0.3 + 0.4j
        got = elliptic_gamma(x, EllipticBase(0.2, 0.1j))
        assert rel_err(got, gamma_direct(x, 0.2, 0.1j)) < 1e-13

    @pytest.mark.parametrize("x", [1.0, 1 / 0.2, 1 / (0.1 * 0.2), 1 / 0.1 ** 2])
    def test_poles_detected(self, x):
        with pytest.raises(PoleError):
            elliptic_gamma(x, EllipticBase(0.1, 0.2))

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            elliptic_gamma(0.0, EllipticBase(0.1, 0.2))

    @given(gamma_args, nomes, nomes)
    @settings(max_examples=50)
    def test_reflection(self, x, p, q):
        base = EllipticBase(p, q)
        prod = elliptic_gamma(x, base) * elliptic_gamma(base.pq / x, base)
        assert abs(prod - 1) <= 1e-10

    @given(gamma_args, nomes, nomes)
    @settings(max_examples=50)
    def test_difference_in_both_nomes(self, x, p, q):
        base = EllipticBase(p, q)
        g = elliptic_gamma(x, base)
        # x = q (or p) is a zero of both sides, so compare on the scale of Gamma(x)
        for lhs, rhs in ((elliptic_gamma(p * x, base), theta(x, q) * g),
                         (elliptic_gamma(q * x, base), theta(x, p) * g)):
            assert abs(lhs - rhs) <= 1e-10 * max(abs(g), abs(rhs))


class TestDuplication:
    @given(complex_in_disc(0.9), nomes, st.integers(0, 8))
    def test_finite_q(self, z, q, k):
        rz, rqz = cmath.sqrt(z), cmath.sqrt(q * z)
        lhs = 1.0 + 0j
        for c in (rz, -rz, rqz, -rqz):
            lhs *= qpoch_finite(c, q, k)
        rhs = qpoch_finite(z, q, 2 * k)
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))

    @given(complex_in_disc(0.9), nomes, nomes)
    @settings(max_examples=30)
    def test_pq_level(self, z, p, q):
        base = EllipticBase(p, q)
        roots = [cmath.sqrt(z), cmath.sqrt(p * z), cmath.sqrt(q * z), cmath.sqrt(p * q * z)]
        args = np.array([s * r for r in roots for s in (1, -1)])
        lhs = np.prod(pq_poch(args, base))
        assert rel_err(lhs, pq_poch(z, base)) <= 1e-12
        glhs = np.prod(elliptic_gamma(args, base))
        assert rel_err(glhs, elliptic_gamma(z, base)) <= 1e-10


class TestThetaAddition:
    @pytest.mark.parametrize("b, w, z, q", [
        (0.5, 0.7, 0.9 + 0.1j, 0.3),
        (0.4, 0.3j, 1.1, 0.2),
    ])
    def test_examples(self, b, w, z, q):
        assert riemann_theta_addition_check(b, w, z, q) < 1e-12

    def test_inversion_of_z(self):
        args = (0.5, 0.7, 0.9 + 0.1j, 0.3)
        lhs, rhs = riemann_theta_addition_sides(*args)
        lhs_inv, rhs_inv = riemann_theta_addition_sides(0.5, 0.7, 1 / (0.9 + 0.1j), 0.3)
        assert abs(lhs - lhs_inv) <= 1e-14 * abs(lhs)
        assert rhs == rhs_inv

    @pytest.mark.parametrize("z", [1.0, -1.0])
    def test_degenerate_z(self, z):
        with pytest.raises(DomainError):
            riemann_theta_addition_check(0.5, 0.7, z, 0.3)

    def test_sides_are_not_trivially_equal(self):
        lhs, rhs = riemann_theta_addition_sides(0.5, 0.7, 0.9 + 0.1j, 0.3)
        bad_lhs, _ = riemann_theta_addition_sides(0.5, 0.71, 0.9 + 0.1j, 0.3)
        assert abs(lhs - rhs) < 1e-12 * abs(rhs)
        # w drops out of the sum only through the identity itself
        assert abs(bad_lhs - lhs) < 1e-12 * abs(rhs)
        single = theta(0.5 * 0.7 * (0.9 + 0.1j), 0.3)
        assert abs(single - rhs) > 1e-3
