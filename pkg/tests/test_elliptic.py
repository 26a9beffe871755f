import cmath

import numpy as np
import pytest

from ellf4 import sampling
from ellf4.beta_integrals import (
    BetaParams,
    F4IntegralParams,
    apply_group_element,
    best_representative,
    e0_product,
    e1_transform_pair,
    e7_move,
    e_f4,
    e_f4_def,
    e_f4_explicit,
    e_m,
    f4_transform,
    inward_reach,
    v_parameter,
)
from ellf4.beta_integrals.elliptic import definition_arguments, explicit_integrand
from ellf4.errors import DenominatorZero, DomainError, NoSeparatingCircle
from ellf4.special_functions import EllipticBase
from ellf4.weyl_f4 import simple_reflections, weyl_group
from oracles import rel_err

FIXTURE_SEED = 42


@pytest.fixture(scope="module")
def seeded_e0():
    base = EllipticBase(0.1, 0.15)
    params = sampling.random_balanced(sampling.make_rng(FIXTURE_SEED), base, 0)
    return params, base


@pytest.fixture(scope="module")
def seeded_e1():
    base = EllipticBase(0.1, 0.15)
    rng = sampling.make_rng(FIXTURE_SEED)
    while True:
        params = sampling.random_balanced(rng, base, 1)
        if max(abs(x) for x in e7_move(params.t, base)) < 0.95:
            return params, base


@pytest.fixture(scope="module")
def f4_point():
    base = EllipticBase(0.1, 0.15)
    return F4IntegralParams(0.5, (0.6, 0.55, 0.5, 0.45), base)


class TestBetaParams:
    def test_balanced_solves_last_parameter(self):
        base = EllipticBase(0.1, 0.15)
        params = BetaParams.balanced([0.5, 0.4, 0.3, 0.6, 0.45], base)
        assert params.m == 0 and len(params.t) == 6
        assert params.balancing_residual(base) < 1e-14

    def test_length_checked(self):
        with pytest.raises(DomainError):
            BetaParams(1, (0.1,) * 6)

    def test_balancing_violation_rejected(self):
        base = EllipticBase(0.1, 0.15)
        with pytest.raises(DomainError):
            e_m(BetaParams(0, (0.5,) * 6), base)

    def test_equality_modulo_sign(self):
        base = EllipticBase(0.1, 0.15)
        params = BetaParams.balanced([0.5, 0.4, 0.3, 0.6, 0.45], base)
        assert params.equivalent(params.negated())
        other = BetaParams.balanced([0.5, 0.4, 0.3, 0.6, 0.46], base)
        assert not params.equivalent(other)


class TestEm:
    def test_evaluation_at_seeded_tuple(self, seeded_e0):
        params, base = seeded_e0
        assert rel_err(e_m(params, base), e0_product(params.t, base)) < 1e-8

    def test_sign_flip(self, seeded_e0):
        params, base = seeded_e0
        assert rel_err(e_m(params.negated(), base), e_m(params, base)) < 1e-12

    def test_permutation(self, seeded_e0):
        params, base = seeded_e0
        shuffled = BetaParams(0, tuple(np.roll(params.t, 2)))
        assert rel_err(e_m(shuffled, base), e_m(params, base)) < 1e-12

    def test_no_separating_circle(self):
        base = EllipticBase(0.1, 0.15)
        # inward pole at t_0 = 1.3 lies beyond the outward pole at 1/t_1 = 0.4
        params = BetaParams.balanced([1.3, 2.5, 0.4, 0.3, 0.2], base)
        with pytest.raises(NoSeparatingCircle):
            e_m(params, base)


class TestE0Product:
    def test_vanishing_factor(self):
        base = EllipticBase(0.1, 0.15)
        t0 = 0.5
        t1 = base.pq / t0
        t = (t0, t1, 0.4, 0.3, 0.6, 1 / (0.4 * 0.3 * 0.6))
        assert e0_product(t, base) == 0

    def test_permutation_symmetry(self, seeded_e0):
        params, base = seeded_e0
        assert rel_err(e0_product(params.t[::-1], base), e0_product(params.t, base)) < 1e-14

    def test_needs_six(self):
        with pytest.raises(DomainError):
            e0_product((0.1,) * 5, EllipticBase(0.1, 0.15))


class TestE7Move:
    def test_trivial_when_v_is_one(self):
        base = EllipticBase(0.1, 0.15)
        head = [0.5, 0.6, 0.4]
        t0123 = head + [base.pq / np.prod(head)]
        tail = [0.5, 0.45, 0.55]
        t = t0123 + tail + [base.pq / np.prod(tail)]
        moved = e7_move(t, base)
        assert np.allclose(moved, t, rtol=1e-14)

    def test_seeded_pair(self, seeded_e1):
        params, base = seeded_e1
        lhs, rhs = e1_transform_pair(params.t, base)
        assert rel_err(rhs, lhs) < 1e-8

    def test_sign_of_v(self, seeded_e1):
        params, base = seeded_e1
        t = params.t
        moved = e7_move(t, base)
        v = moved[0] / t[0]
        flipped = tuple(x * -v for x in t[:4]) + tuple(x / -v for x in t[4:])
        assert np.allclose(np.negative(flipped), moved)
        assert rel_err(e_m(BetaParams(1, flipped), base), e_m(BetaParams(1, moved), base)) < 1e-12


class TestF4Routes:
    def test_definition_arguments_balance(self, f4_point):
        args = definition_arguments(f4_point)
        assert len(args) == 16
        assert rel_err(np.prod(args), f4_point.base.pq ** 6) < 1e-13

    def test_routes_agree(self, f4_point):
        assert rel_err(e_f4_def(f4_point), e_f4_explicit(f4_point)) < 1e-8

    def test_single_parameter_dual(self, f4_point):
        p = f4_point
        t = list(p.t)
        t[2] = p.base.pq / (p.b * t[2])
        assert rel_err(e_f4_def(p.with_t(t)), e_f4_def(p)) < 1e-10

    def test_global_sign(self, f4_point):
        neg = f4_point.with_t([-x for x in f4_point.t])
        assert rel_err(e_f4_def(neg), e_f4_def(f4_point)) < 1e-10
        assert rel_err(e_f4_explicit(neg), e_f4_explicit(f4_point)) < 1e-12

    def test_explicit_integrand_is_even(self, f4_point):
        f = explicit_integrand(f4_point)
        n = 256
        w = np.exp(2j * np.pi * np.arange(n) / n)
        assert rel_err(np.mean(f(1 / w)), np.mean(f(w))) < 1e-13

    def test_denominator_zero(self):
        base = EllipticBase(0.1, 0.15)
        b = 0.5
        params = F4IntegralParams(b, (cmath.sqrt(1 / b), 0.5, 0.4, 0.45), base)
        assert params.denominator_is_zero()
        with pytest.raises(DenominatorZero):
            e_f4_def(params)


class TestVParameter:
    def test_proof_point(self):
        q = 0.3
        base = EllipticBase(q, q)
        params = F4IntegralParams(q ** 0.75, (q ** 0.75, q ** 0.75, q ** 0.5, q ** 0.5), base)
        assert abs(v_parameter(params) - 1) < 1e-15
        assert np.allclose(f4_transform(params).t, params.t, rtol=1e-15)

    def test_trivial_product(self):
        base = EllipticBase(0.2, 0.25)
        b, t = 0.4, [0.5, 0.6, 0.3]
        t.append(base.pq ** 2 / (b * b * np.prod(t)))
        assert abs(v_parameter(F4IntegralParams(b, t, base)) - 1) < 1e-14

    def test_involution(self, f4_point):
        once = f4_transform(f4_point)
        v2 = v_parameter(once)
        assert abs(abs(v2 * v_parameter(f4_point)) - 1) < 1e-14
        twice = f4_transform(once)
        assert np.allclose(twice.t, f4_point.t, rtol=1e-13) or np.allclose(twice.t, np.negative(f4_point.t), rtol=1e-13)


class TestF4Symmetry:
    def test_main_transformation(self):
        base = EllipticBase(0.1, 0.15)
        rng = sampling.make_rng(7)
        for _ in range(3):
            params = sampling.random_f4_point(rng, base)
            assert rel_err(e_f4_explicit(f4_transform(params)), e_f4_explicit(params)) < 1e-8

    def test_proof_point_maps_to_itself(self):
        q = 0.3
        base = EllipticBase(q, q)
        params = F4IntegralParams(q ** 0.75, (q ** 0.75, q ** 0.75, q ** 0.5, q ** 0.5), base)
        assert rel_err(e_f4(f4_transform(params)), e_f4(params)) < 1e-12

    def test_generators(self):
        base = EllipticBase(0.1, 0.15)
        params = sampling.random_f4_point(sampling.make_rng(3), base, spread=0.4, whole_orbit=True)
        ref = e_f4_explicit(params)
        for g in simple_reflections():
            assert rel_err(e_f4_explicit(apply_group_element(g, params)), ref) < 1e-8

    def test_random_group_elements(self):
        base = EllipticBase(0.1, 0.15)
        rng = sampling.make_rng(11)
        params = sampling.random_f4_point(rng, base, spread=0.4, whole_orbit=True)
        ref = e_f4_explicit(params)
        group = weyl_group()
        for k in rng.integers(0, len(group), 4):
            assert rel_err(e_f4_explicit(apply_group_element(group[k], params)), ref) < 1e-8


class TestOrbitRepresentative:
    def test_representative_is_admissible(self):
        base = EllipticBase(0.1, 0.15)
        good = F4IntegralParams(0.5, (0.6, 0.55, 0.5, 0.45), base)
        g = weyl_group()[700]
        moved = apply_group_element(g, good)
        _, rep = best_representative(moved)
        assert inward_reach(rep) <= inward_reach(good) + 1e-12

    def test_value_through_representative(self):
        base = EllipticBase(0.1, 0.15)
        good = F4IntegralParams(0.5, (0.6, 0.55, 0.5, 0.45), base)
        bad = next(img for img in (apply_group_element(g, good) for g in weyl_group()) if inward_reach(img) > 1.5)
        with pytest.raises(NoSeparatingCircle):
            e_f4_explicit(bad)
        assert rel_err(e_f4(bad), e_f4_explicit(good)) < 1e-10
