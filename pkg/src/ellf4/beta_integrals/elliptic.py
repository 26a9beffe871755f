"""Renormalised elliptic beta integrals E^m and the F4-symmetric integral E(b;t;p,q)."""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from ..errors import DenominatorZero, DomainError, NoSeparatingCircle
from ..quadrature import (
    GAMMA_OF_C_OVER_Z,
    GAMMA_OF_CZ,
    PoleCatalog,
    PoleFactor,
    QuadratureConfig,
    QuadratureResult,
    even_pm_factors,
    gamma_pole_catalog,
    integrate_circle,
    select_radius,
)
from ..special_functions import (
    EllipticBase,
    _lattice_hits,
    elliptic_gamma,
    elliptic_gamma_reciprocal,
    pq_poch,
    qpoch_inf,
    theta,
)
from ..weyl_f4 import GroupElement, weyl_group, _mult_action_coords

QUAD = QuadratureConfig(n_start=64, n_max=1 << 15, rel_tol=1e-13)


def _record(diag, result):
    if diag is not None:
        diag.append(result)


def contour_integral(f, catalog: PoleCatalog, cfg: QuadratureConfig | None = None, diag=None) -> QuadratureResult:
    """Integrate f over the circle chosen from the pole catalog."""
    radius = select_radius(catalog)
    if radius is None:
        raise NoSeparatingCircle(
            f"inward poles reach |z|={catalog.inward_max:.6g} but outward poles start at "
            f"|z|={catalog.outward_min:.6g}")
    res = integrate_circle(f, radius, cfg or QUAD)
    _record(diag, res)
    return res


def _gamma(x, base):
    return elliptic_gamma(x, base, check_poles=False)


def _gamma_pm(c, z, base):
    """Gamma(c z) Gamma(c / z)."""
    return _gamma(c * z, base) * _gamma(c / z, base)


def _inv_gamma_z2(z, base):
    """1/Gamma(z^{+-2}) = theta(z^-2;p) theta(z^2;q); vanishes (does not blow up) at z = +-1."""
    return theta(z ** -2, base.p, base.policy) * theta(z ** 2, base.q, base.policy)


# ---------------------------------------------------------------------------
# E^m


@dataclass(frozen=True)
class BetaParams:
    """2m+6 parameters with prod t = (pq)^{m+1}, modulo t -> -t."""

    m: int
    t: tuple

    def __post_init__(self):
        t = tuple(complex(x) for x in self.t)
        if self.m < 0:
            raise DomainError("m must be >= 0")
        if len(t) != 2 * self.m + 6:
            raise DomainError(f"E^{self.m} takes {2 * self.m + 6} parameters, got {len(t)}")
        object.__setattr__(self, "t", t)

    @classmethod
    def balanced(cls, free: Sequence[complex], base: EllipticBase) -> "BetaParams":
        """Complete 2m+5 free parameters by solving the balancing condition for the last one."""
        free = [complex(x) for x in free]
        if len(free) % 2 == 0 or len(free) < 5:
            raise DomainError("need 2m+5 free parameters")
        m = (len(free) - 5) // 2
        last = base.pq ** (m + 1) / np.prod(free)
        return cls(m, tuple(free) + (complex(last),))

    def balancing_residual(self, base: EllipticBase) -> float:
        target = base.pq ** (self.m + 1)
        return abs(np.prod(self.t) - target) / abs(target)

    def check_balancing(self, base: EllipticBase, rel: float = 1e-12):
        if self.balancing_residual(base) > rel:
            raise DomainError(f"parameters violate prod t = (pq)^{self.m + 1}")

    def equivalent(self, other: "BetaParams", rel: float = 1e-12) -> bool:
        a, b = np.asarray(self.t), np.asarray(other.t)
        if self.m != other.m:
            return False
        return bool(np.allclose(a, b, rtol=rel, atol=0) or np.allclose(a, -b, rtol=rel, atol=0))

    def negated(self) -> "BetaParams":
        return BetaParams(self.m, tuple(-x for x in self.t))


def beta_integrand(t: Sequence[complex], base: EllipticBase):
    t = [complex(x) for x in t]

    def f(z):
        val = _inv_gamma_z2(z, base)
        for c in t:
            val = val * _gamma_pm(c, z, base)
        return val

    return f


def beta_catalog(t: Sequence[complex], base: EllipticBase, radius: float = 1.0) -> PoleCatalog:
    return gamma_pole_catalog(even_pm_factors(t), base, radius)


def pair_prefactor(t: Sequence[complex], base: EllipticBase) -> complex:
    """prod_{r<s} (t_r t_s; p, q)."""
    t = list(t)
    pairs = np.array([t[r] * t[s] for r in range(len(t)) for s in range(r + 1, len(t))])
    return complex(np.prod(pq_poch(pairs, base)))


def kappa(base: EllipticBase) -> complex:
    """(p;p)(q;q)/2."""
    return qpoch_inf(base.p, base.p, base.policy) * qpoch_inf(base.q, base.q, base.policy) / 2


def e_m(params: BetaParams, base: EllipticBase, cfg: QuadratureConfig | None = None, diag=None) -> complex:
    """Renormalised elliptic beta integral

        E^m(t) = prod_{r<s} (t_r t_s;p,q) (p;p)(q;q)/2 oint prod Gamma(t_r z^{+-1}) / Gamma(z^{+-2}) dz/(2 pi i z)
    """
    params.check_balancing(base)
    res = contour_integral(beta_integrand(params.t, base), beta_catalog(params.t, base), cfg, diag)
    return pair_prefactor(params.t, base) * kappa(base) * res.value


def e0_product(t: Sequence[complex], base: EllipticBase) -> complex:
    """Closed form of E^0: prod_{r<s} (pq / t_r t_s; p, q)."""
    t = [complex(x) for x in t]
    if len(t) != 6:
        raise DomainError("E^0 takes six parameters")
    BetaParams(0, tuple(t)).check_balancing(base)
    pairs = np.array([base.pq / (t[r] * t[s]) for r in range(6) for s in range(r + 1, 6)])
    return complex(np.prod(pq_poch(pairs, base)))


def e7_move(t: Sequence[complex], base: EllipticBase) -> tuple:
    """(t0 v, .., t3 v, t4/v, .., t7/v) with v^2 = pq / t0 t1 t2 t3 (principal root)."""
    t = [complex(x) for x in t]
    v = cmath.sqrt(base.pq / (t[0] * t[1] * t[2] * t[3]))
    return tuple(x * v for x in t[:4]) + tuple(x / v for x in t[4:])


def e1_transform_pair(t: Sequence[complex], base: EllipticBase, cfg: QuadratureConfig | None = None,
                      diag=None) -> tuple:
    """Both sides of the E7 move on E^1, each by quadrature."""
    t = tuple(complex(x) for x in t)
    if len(t) != 8:
        raise DomainError("E^1 takes eight parameters")
    lhs = e_m(BetaParams(1, t), base, cfg, diag)
    rhs = e_m(BetaParams(1, e7_move(t, base)), base, cfg, diag)
    return lhs, rhs


# ---------------------------------------------------------------------------
# E(b; t; p, q)


@dataclass(frozen=True)
class F4IntegralParams:
    b: complex
    t: tuple
    base: EllipticBase

    def __post_init__(self):
        t = tuple(complex(x) for x in self.t)
        if len(t) != 4:
            raise DomainError("E(b;t;p,q) takes four t parameters")
        if self.b == 0 or any(x == 0 for x in t):
            raise DomainError("b and t_r must be nonzero")
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "b", complex(self.b))

    @property
    def A(self) -> complex:
        """Scale of the multiplicative W(F4) action, pq/b."""
        return self.base.pq / self.b

    def with_t(self, t: Sequence[complex]) -> "F4IntegralParams":
        return F4IntegralParams(self.b, tuple(t), self.base)

    def denominator_values(self) -> np.ndarray:
        b, base = self.b, self.base
        return np.array([b * x * x for x in self.t] + [base.pq ** 2 / (b * x * x) for x in self.t])

    def denominator_is_zero(self) -> bool:
        return bool(np.any(_lattice_hits(self.denominator_values(), self.base.p, self.base.q)))


def definition_arguments(params: F4IntegralParams) -> tuple:
    """The sixteen E^5 arguments t_r, pq/(b t_r), +-sqrt(b), +-sqrt(bq), +-sqrt(bp), +-sqrt(bpq)."""
    b, p, q = params.b, params.base.p, params.base.q
    args = []
    for x in params.t:
        args += [x, p * q / (b * x)]
    for y in (cmath.sqrt(b), cmath.sqrt(b * q), cmath.sqrt(b * p), cmath.sqrt(b * p * q)):
        args += [y, -y]
    return tuple(args)


def e_f4_def(params: F4IntegralParams, cfg: QuadratureConfig | None = None, diag=None) -> complex:
    """E(b;t;p,q) as E^5 of sixteen arguments over prod (b t_r^2, p^2q^2/(b t_r^2); p, q)."""
    if params.denominator_is_zero():
        raise DenominatorZero("b t_r^2 or p^2 q^2/(b t_r^2) hits a zero of (x;p,q)")
    base = params.base
    num = e_m(BetaParams(5, definition_arguments(params)), base, cfg, diag)
    den = complex(np.prod(pq_poch(params.denominator_values(), base)))
    return num / den


def explicit_prefactor(params: F4IntegralParams) -> complex:
    b, t, base = params.b, params.t, params.base
    p, q = base.p, base.q
    vals = []
    for r in range(4):
        for s in range(r + 1, 4):
            vals += [t[r] * t[s], p * q * t[r] / (b * t[s]), p * q * t[s] / (b * t[r]),
                     (p * q) ** 2 / (b * b * t[r] * t[s])]
    pre = complex(np.prod(pq_poch(np.array(vals), base)))
    pre *= pq_poch(p * q / b, base) ** 4
    pre *= complex(np.prod(pq_poch(np.array([b * b, p * b * b, q * b * b, p * q * b * b]), base)))
    pre /= complex(np.prod(pq_poch(np.array([b, p * b, q * b, p * q * b]), base)))
    return pre * kappa(base)


def explicit_integrand(params: F4IntegralParams):
    b, t, base = params.b, params.t, params.base

    def f(z):
        z2 = z * z
        val = _inv_gamma_z2(z, base) * _gamma(b * z2, base) * _gamma(b / z2, base)
        for c in t:
            val = val * _gamma_pm(c, z, base)
            val = val * elliptic_gamma_reciprocal(b * c * z, base) * elliptic_gamma_reciprocal(b * c / z, base)
        return val

    return f


def explicit_catalog(params: F4IntegralParams, radius: float = 1.0) -> PoleCatalog:
    b, base = params.b, params.base
    dual = [base.pq / (b * c) for c in params.t]  # 1/Gamma(b t z) = Gamma(pq/(b t) z^-1)
    factors = even_pm_factors(params.t, source="Gamma(t_r z^+-1)")
    factors += even_pm_factors(dual, source="1/Gamma(b t_r z^+-1)")
    factors += [PoleFactor(b, GAMMA_OF_CZ, 2, "Gamma(b z^2)"), PoleFactor(b, GAMMA_OF_C_OVER_Z, 2, "Gamma(b z^-2)")]
    return gamma_pole_catalog(factors, base, radius)


def e_f4_explicit(params: F4IntegralParams, cfg: QuadratureConfig | None = None, diag=None) -> complex:
    """E(b;t;p,q) through the single-integral form with integrand

        Gamma(b z^{+-2}) / Gamma(z^{+-2}) prod_r Gamma(t_r z^{+-1}) / Gamma(b t_r z^{+-1}).
    """
    res = contour_integral(explicit_integrand(params), explicit_catalog(params), cfg, diag)
    return explicit_prefactor(params) * res.value


def v_parameter(params: F4IntegralParams) -> complex:
    """v with v^2 = p^2 q^2 / (b^2 t1 t2 t3 t4); the sign of v is immaterial."""
    b, t = params.b, params.t
    if b == 0 or any(x == 0 for x in t):
        raise DomainError("v needs nonzero b and t")
    return cmath.sqrt(params.base.pq ** 2 / (b * b * t[0] * t[1] * t[2] * t[3]))


def f4_transform(params: F4IntegralParams) -> F4IntegralParams:
    """t -> t v, the move of the main transformation."""
    v = v_parameter(params)
    return params.with_t(tuple(x * v for x in params.t))


def apply_group_element(g: GroupElement, params: F4IntegralParams) -> F4IntegralParams:
    """Multiplicative W(F4) action on t with A = pq/b."""
    return params.with_t(_mult_action_coords(g, params.t, params.A))


# ---------------------------------------------------------------------------
# evaluation with a contour-admissible orbit representative


@lru_cache(maxsize=None)
def _float_matrices() -> np.ndarray:
    return np.stack([g.as_float() for g in weyl_group()])


def inward_reach(params: F4IntegralParams) -> float:
    """Largest modulus among the generation-0 inward poles of the explicit integrand.

    A separating circle (the unit circle) exists iff this is < 1.
    """
    A = params.A
    mods = [abs(x) for x in params.t] + [abs(A / x) for x in params.t] + [abs(params.b) ** 0.5]
    return max(mods)


def best_representative(params: F4IntegralParams) -> tuple:
    """Group element g and g(t) minimising inward_reach over the W(F4) orbit."""
    A = params.A
    half_log_a = 0.5 * np.log(abs(A))
    u = np.log(np.abs(np.asarray(params.t))) - half_log_a
    images = _float_matrices() @ u
    reach = np.max(np.abs(images), axis=1)
    k = int(np.argmin(reach))
    g = weyl_group()[k]
    return g, apply_group_element(g, params)


def e_f4(params: F4IntegralParams, cfg: QuadratureConfig | None = None, diag=None,
         reach_limit: float = 0.9) -> complex:
    """E(b;t;p,q) by the explicit form, moving along the W(F4) orbit when needed.

    When the given t has no separating circle (or a poor one), E is
    evaluated at the orbit point whose poles sit farthest from the unit
    circle; E is constant on orbits, so the value is the same.
    """
    if inward_reach(params) <= reach_limit:
        return e_f4_explicit(params, cfg, diag)
    _, rep = best_representative(params)
    if inward_reach(rep) >= 1 and inward_reach(params) >= 1:
        raise NoSeparatingCircle("no point of the W(F4) orbit admits a separating circle")
    if inward_reach(rep) < inward_reach(params):
        return e_f4_explicit(rep, cfg, diag)
    return e_f4_explicit(params, cfg, diag)
