"""Basic hypergeometric integrals obtained as p -> 0 limits of E(b;t;p,q)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..errors import NoSeparatingCircle, OutsidePolytope
from ..quadrature import (
    QPOCH_DEN_C_OVER_Z,
    QPOCH_DEN_CZ,
    PoleCatalog,
    PoleFactor,
    QuadratureConfig,
    even_pm_factors,
    gamma_pole_catalog,
    integrate_circle,
    residue_numeric,
)
from ..special_functions import EllipticBase, qpoch_inf, theta
from ..weyl_f4 import LimitExponents
from .elliptic import QUAD, F4IntegralParams, contour_integral, e_f4

B1_VERTEX = "B1_VERTEX"
MID_CASE_A = "MID_CASE_A"
MID_CASE_B = "MID_CASE_B"
MID_CASE_C = "MID_CASE_C"
MID_CASE_D = "MID_CASE_D"
B0_INTERIOR = "B0_INTERIOR"
B0_EDGE_NEG = "B0_EDGE_NEG"
B0_EDGE_POS = "B0_EDGE_POS"
OUTSIDE = "OUTSIDE"

_EXP_TOL = 1e-12


def _qp(x, q):
    return qpoch_inf(x, q)


def _qprod(values, q) -> complex:
    values = list(values)
    if not values:
        return 1.0 + 0j
    return complex(np.prod(qpoch_inf(np.array(values, dtype=complex), q)))


def _pairs(t):
    return [(t[r], t[s]) for r in range(len(t)) for s in range(r + 1, len(t))]


def _catalog(factors, q) -> PoleCatalog:
    return gamma_pole_catalog(factors, None, 1.0, q=q)


# ---------------------------------------------------------------------------
# even q-integrals


def aw_type_integrand(b, t: Sequence[complex], q):
    """(z^{+-2};q)/(b z^{+-2};q) prod_r (b t_r z^{+-1};q)/(t_r z^{+-1};q)."""
    b, q = complex(b), complex(q)
    t = [complex(x) for x in t]

    def f(z):
        z2 = z * z
        val = _qp(z2, q) * _qp(1 / z2, q) / (_qp(b * z2, q) * _qp(b / z2, q))
        for c in t:
            val = val * _qp(b * c * z, q) * _qp(b * c / z, q) / (_qp(c * z, q) * _qp(c / z, q))
        return val

    return f


def aw_type_prefactor(b, t: Sequence[complex], q) -> complex:
    b, q = complex(b), complex(q)
    pre = _qprod([x * y for x, y in _pairs(t)], q)
    return pre * _qprod([b * b, q * b * b, q], q) / (2 * _qprod([b, q * b], q))


def _aw_inward_poles(b, t, q, kmax: int = 200) -> list:
    """Poles of the integrand that a contour must enclose, z = t_r q^k and z^2 = b q^k."""
    out = []
    for c in t:
        for k in range(kmax):
            x = c * q ** k
            if abs(x) < 1e-3:
                break
            out.append(x)
    sb = np.sqrt(complex(b))
    for k in range(kmax):
        x = sb * q ** (k / 2) if k % 2 == 0 else sb * np.sqrt(q) * q ** (k // 2)
        if abs(x) < 1e-3:
            break
        out += [x, -x]
    return out


def _continued_even_integral(f, inward: list, cfg: QuadratureConfig | None, diag=None) -> complex:
    """Integral of an even (z -> 1/z) integrand over a contour separating the
    inward poles from their reciprocals, evaluated as the unit-circle integral
    plus twice the residues of f(z)/z at inward poles outside the unit circle.
    """
    outside = [x for x in inward if abs(x) > 1]
    every = inward + [1 / x for x in inward]
    if any(abs(abs(x) - 1) < 1e-6 for x in every):
        raise NoSeparatingCircle("integrand pole on the unit circle")
    if outside and any(abs(x) < 1 and abs(1 / x) > 1 and abs(x - 1 / y) < 1e-14 for x in inward for y in inward):
        raise NoSeparatingCircle("inward and outward poles coincide")
    res = integrate_circle(f, 1.0, cfg or QUAD)
    if diag is not None:
        diag.append(res)
    total = res.value
    for x in outside:
        gap = min(abs(x - y) for y in every if y is not x and abs(x - y) > 0)
        r = min(0.3 * gap, 0.3 * (abs(x) - 1))
        total += 2 * residue_numeric(lambda z: f(z) / z, x, r, cfg or QUAD)
    return total


def aw_type_integral(b, t: Sequence[complex], q, cfg: QuadratureConfig | None = None, diag=None) -> complex:
    """prod_{r<s} (t_r t_s;q) (b^2, qb^2, q;q) / 2(b, qb;q) times the contour
    integral of aw_type_integrand; covers B2 (four t), the edge (three), the
    octahedron square (two) and the interior identity (one).

    Parameters with |t_r| > 1 are handled by adding the residues the
    deformed contour picks up outside the unit circle.
    """
    b, q = complex(b), complex(q)
    if abs(b) >= 1:
        raise NoSeparatingCircle("|b| >= 1: the z^2 = b q^k poles leave the unit disc")
    f = aw_type_integrand(b, t, q)
    pre = aw_type_prefactor(b, t, q)
    if all(abs(complex(x)) < 1 for x in t):
        factors = even_pm_factors(t, gamma=False)
        factors += [PoleFactor(b, QPOCH_DEN_CZ, 2, "(b z^2;q)"), PoleFactor(b, QPOCH_DEN_C_OVER_Z, 2, "(b/z^2;q)")]
        return pre * contour_integral(f, _catalog(factors, q), cfg, diag).value
    return pre * _continued_even_integral(f, _aw_inward_poles(b, t, q), cfg, diag)


def b2_integral(b, t: Sequence[complex], q, cfg: QuadratureConfig | None = None, diag=None) -> complex:
    """B2(b;t;q), the vertex integral with four parameters."""
    if len(t) != 4:
        raise ValueError("B2 takes four t parameters")
    return aw_type_integral(b, t, q, cfg, diag)


def b1_integrand(b, t: Sequence[complex], q):
    b, q = complex(b), complex(q)
    t = [complex(x) for x in t]

    def f(z):
        z2 = z * z
        val = _qp(z2, q) * _qp(1 / z2, q) * _qp(q * z2 / b, q) * _qp(q / (b * z2), q)
        for c in t:
            d = q / (b * c)
            val = val / (_qp(c * z, q) * _qp(c / z, q) * _qp(d * z, q) * _qp(d / z, q))
        return val

    return f


def b1_catalog(b, t: Sequence[complex], q) -> PoleCatalog:
    coeffs = list(t) + [q / (b * c) for c in t]
    return _catalog(even_pm_factors(coeffs, gamma=False), q)


def b1_integral(b, t: Sequence[complex], q, cfg: QuadratureConfig | None = None, diag=None) -> complex:
    """B1(b;t;q): the p -> 0 limit of E(pb; t; p, q).

        prod_{r<s} (t_r t_s, q t_r/b t_s, q t_s/b t_r, q^2/b^2 t_r t_s;q) (q/b;q)^4 (q;q)/2
          * oint (z^{+-2}, q z^{+-2}/b;q) / prod_r (t_r z^{+-1}, q z^{+-1}/(b t_r);q)
    """
    b, q = complex(b), complex(q)
    t = [complex(x) for x in t]
    vals = []
    for x, y in _pairs(t):
        vals += [x * y, q * x / (b * y), q * y / (b * x), q * q / (b * b * x * y)]
    pre = _qprod(vals, q) * _qp(q / b, q) ** 4 * _qp(q, q) / 2
    res = contour_integral(b1_integrand(b, t, q), b1_catalog(b, t, q), cfg, diag)
    return pre * res.value


# ---------------------------------------------------------------------------
# beta = 0 limits


def _split_exponents(tau, targets):
    """Indices whose exponent equals each target (to _EXP_TOL)."""
    return [[i for i, x in enumerate(tau) if abs(x - tgt) < _EXP_TOL] for tgt in targets]


def limit_b0_interior(b, t: Sequence[complex], q, exponents: LimitExponents,
                      cfg: QuadratureConfig | None = None, diag=None) -> complex:
    """Limit of E(b; t_r p^{tau_r}) when every tau_r lies in [0, 1]."""
    if abs(exponents.beta) > _EXP_TOL or any(x < -_EXP_TOL or x > 1 + _EXP_TOL for x in exponents.tau):
        raise OutsidePolytope(f"needs beta = 0 and 0 <= tau_r <= 1, got {exponents}")
    b, q = complex(b), complex(q)
    t = [complex(x) for x in t]
    zero, one = _split_exponents(exponents.tau, (0.0, 1.0))
    vals = [t[r] * t[s] for r in zero for s in zero if r < s]
    vals += [q * t[r] / (b * t[s]) for r in zero for s in one]
    vals += [q * q / (b * b * t[r] * t[s]) for r in one for s in one if r < s]
    pre = _qprod(vals, q) * _qprod([b * b, q * b * b], q) / _qprod([b, q * b], q) * _qp(q, q) / 2

    def f(z):
        z2 = z * z
        val = _qp(z2, q) * _qp(1 / z2, q) / (_qp(b * z2, q) * _qp(b / z2, q))
        for r in zero:
            c = t[r]
            val = val * _qp(b * c * z, q) * _qp(b * c / z, q) / (_qp(c * z, q) * _qp(c / z, q))
        for r in one:
            c, d = q / t[r], q / (b * t[r])
            val = val * _qp(c * z, q) * _qp(c / z, q) / (_qp(d * z, q) * _qp(d / z, q))
        return val

    coeffs = [t[r] for r in zero] + [q / (b * t[r]) for r in one]
    factors = even_pm_factors(coeffs, gamma=False)
    factors += [PoleFactor(b, QPOCH_DEN_CZ, 2, "(b z^2;q)"), PoleFactor(b, QPOCH_DEN_C_OVER_Z, 2, "(b/z^2;q)")]
    return pre * contour_integral(f, _catalog(factors, q), cfg, diag).value


def edge_prefactor(b, t1, lower: Sequence[complex], upper: Sequence[complex], q) -> complex:
    b, t1, q = complex(b), complex(t1), complex(q)
    pre = _qprod([complex(x) * t1 for x in lower], q) * _qprod([q * t1 / (b * complex(x)) for x in upper], q)
    return pre * _qprod([q / b, q * b * b, q], q) / _qprod([q / (b * b), q * b], q)


def edge_integrand(b, t1, lower: Sequence[complex], upper: Sequence[complex], q, boundary: bool = False):
    """theta(b^2 t1 z;q) / (t1 z, q/(b t1 z);q) times the factors of the
    saturated parameters (and the tau_1 = -1/2 boundary factor)."""
    b, t1, q = complex(b), complex(t1), complex(q)
    lower = [complex(x) for x in lower]
    upper = [complex(x) for x in upper]

    def f(z):
        val = theta(b * b * t1 * z, q) / (_qp(t1 * z, q) * _qp(q / (b * t1 * z), q))
        if boundary:
            z2 = z * z
            val = val * (1 - 1 / z2) * _qp(q / (b * z2), q) * _qp(b * t1 / z, q) / (_qp(b / z2, q) * _qp(t1 / z, q))
        for c in lower:
            val = val * _qp(b * c / z, q) / _qp(c / z, q)
        for c in upper:
            val = val * _qp(q / (c * z), q) / _qp(q / (b * c * z), q)
        return val

    return f


def edge_integral(b, t1, lower: Sequence[complex], upper: Sequence[complex], q, boundary: bool = False,
                  cfg: QuadratureConfig | None = None, diag=None) -> complex:
    """Non-even edge integral with the theta(b^2 t1 z;q) numerator.

    ``lower`` holds the t_r with tau_r = -tau_1, ``upper`` those with
    tau_r = 1 + tau_1; ``boundary`` switches on the extra factor used when
    tau_1 = -1/2.  The contour keeps the zeros of (t1 z;q) outside and every
    other denominator zero inside.
    """
    b, t1, q = complex(b), complex(t1), complex(q)
    lower = [complex(x) for x in lower]
    upper = [complex(x) for x in upper]
    f = edge_integrand(b, t1, lower, upper, q, boundary)
    factors = [PoleFactor(t1, QPOCH_DEN_CZ, 1, "(t1 z;q)"), PoleFactor(q / (b * t1), QPOCH_DEN_C_OVER_Z, 1, "(q/b t1 z;q)")]
    factors += [PoleFactor(c, QPOCH_DEN_C_OVER_Z, 1, "(t_r/z;q)") for c in lower]
    factors += [PoleFactor(q / (b * c), QPOCH_DEN_C_OVER_Z, 1, "(q/b t_r z;q)") for c in upper]
    if boundary:
        factors += [PoleFactor(b, QPOCH_DEN_C_OVER_Z, 2, "(b/z^2;q)"), PoleFactor(t1, QPOCH_DEN_C_OVER_Z, 1, "(t1/z;q)")]
    pre = edge_prefactor(b, t1, lower, upper, q)
    return pre * contour_integral(f, _catalog(factors, q), cfg, diag).value


def edge_integral_pos(b, t1, lower: Sequence[complex], upper: Sequence[complex], q, boundary: bool = False,
                      cfg: QuadratureConfig | None = None, diag=None) -> complex:
    """Mirror of edge_integral for tau_1 > 1: ``lower`` has tau_r = tau_1 - 1,
    ``upper`` has tau_r = 2 - tau_1, ``boundary`` is tau_1 = 3/2.  The zeros
    of (q z/b t1;q) stay outside, those of (t1/z;q) and the rest inside.
    """
    b, t1, q = complex(b), complex(t1), complex(q)
    lower = [complex(x) for x in lower]
    upper = [complex(x) for x in upper]
    pre = _qprod([q * x / (b * t1) for x in lower], q) * _qprod([q * q / (b * b * t1 * x) for x in upper], q)
    pre *= _qprod([q / b, q * b * b, q], q) / _qprod([q / (b * b), q * b], q)
    s = q / (b * t1)

    def f(z):
        val = theta(q * b * z / t1, q) / (_qp(s * z, q) * _qp(t1 / z, q))
        if boundary:
            z2 = z * z
            val = val * (1 - 1 / z2) * _qp(q / (b * z2), q) * _qp(q / (t1 * z), q) / (_qp(b / z2, q) * _qp(s / z, q))
        for c in lower:
            val = val * _qp(b * c / z, q) / _qp(c / z, q)
        for c in upper:
            val = val * _qp(q / (c * z), q) / _qp(q / (b * c * z), q)
        return val

    factors = [PoleFactor(s, QPOCH_DEN_CZ, 1, "(q z/b t1;q)"), PoleFactor(t1, QPOCH_DEN_C_OVER_Z, 1, "(t1/z;q)")]
    factors += [PoleFactor(c, QPOCH_DEN_C_OVER_Z, 1, "(t_r/z;q)") for c in lower]
    factors += [PoleFactor(q / (b * c), QPOCH_DEN_C_OVER_Z, 1, "(q/b t_r z;q)") for c in upper]
    if boundary:
        factors += [PoleFactor(b, QPOCH_DEN_C_OVER_Z, 2, "(b/z^2;q)"), PoleFactor(s, QPOCH_DEN_C_OVER_Z, 1, "(q/b t1 z;q)")]
    return pre * contour_integral(f, _catalog(factors, q), cfg, diag).value


def _edge_index(tau, negative: bool):
    for i, x in enumerate(tau):
        if (x < -_EXP_TOL) if negative else (x > 1 + _EXP_TOL):
            return i
    return None


def limit_b0_edge(b, t: Sequence[complex], q, exponents: LimitExponents,
                  cfg: QuadratureConfig | None = None, diag=None) -> complex:
    """Limit of E(b; t_r p^{tau_r}) when one tau_r is < 0 or > 1 (beta = 0).

    The exceptional parameter may sit at any position; the others are
    sorted into the factor groups by their exponents.
    """
    if abs(exponents.beta) > _EXP_TOL or not exponents.in_polytope(1e-12):
        raise OutsidePolytope(f"not a beta = 0 edge configuration: {exponents}")
    tau = list(exponents.tau)
    t = [complex(x) for x in t]
    i = _edge_index(tau, True)
    if i is not None:
        rest = [r for r in range(4) if r != i]
        lower = [t[r] for r in rest if abs(tau[r] + tau[i]) < _EXP_TOL]
        upper = [t[r] for r in rest if abs(tau[r] - 1 - tau[i]) < _EXP_TOL]
        return edge_integral(b, t[i], lower, upper, q, abs(tau[i] + 0.5) < _EXP_TOL, cfg, diag)
    i = _edge_index(tau, False)
    if i is not None:
        rest = [r for r in range(4) if r != i]
        lower = [t[r] for r in rest if abs(tau[r] - tau[i] + 1) < _EXP_TOL]
        upper = [t[r] for r in rest if abs(tau[r] - 2 + tau[i]) < _EXP_TOL]
        return edge_integral_pos(b, t[i], lower, upper, q, abs(tau[i] - 1.5) < _EXP_TOL, cfg, diag)
    raise OutsidePolytope(f"no exponent outside [0, 1]: {exponents}")


# ---------------------------------------------------------------------------
# 0 < beta < 1


def _mid_case(tau, beta):
    """(tag, special index or None) for 0 < beta < 1."""
    c = 1.0 - beta
    close = lambda x, y: abs(x - y) < _EXP_TOL
    if all(close(x, 0.0) or close(x, c) for x in tau):
        return MID_CASE_A, None
    for j in range(4):
        others = [tau[r] for r in range(4) if r != j]
        if all(close(x, c / 2) for x in others):
            # the printed tau_4 = (3 - beta)/2 lies outside the polytope for beta > 0;
            # 3(1 - beta)/2 is the W(F4) image of the case with tau_4 = (beta - 1)/2
            if close(tau[j], 1.5 * c):
                return MID_CASE_B, j
            if close(tau[j], -c / 2):
                return MID_CASE_C, j
    return MID_CASE_D, None


def mid_beta_limit(b, t: Sequence[complex], q, exponents: LimitExponents) -> complex:
    """Closed-form limit of E(b p^beta; t_r p^{tau_r}) for 0 < beta < 1."""
    beta = exponents.beta
    if not (_EXP_TOL < beta < 1 - _EXP_TOL) or not exponents.in_polytope(1e-12):
        raise OutsidePolytope(f"needs 0 < beta < 1 inside the polytope, got {exponents}")
    b, q = complex(b), complex(q)
    t = [complex(x) for x in t]
    tag, j = _mid_case(exponents.tau, beta)
    if tag == MID_CASE_A:
        arg = 1.0 + 0j
        for r, x in enumerate(exponents.tau):
            arg *= t[r] if abs(x) < _EXP_TOL else q / (b * t[r])
        return complex(_qp(arg, q))
    if tag == MID_CASE_B:
        return complex(_qp(q ** 3 / (b ** 3 * t[j] ** 2), q))
    if tag == MID_CASE_C:
        return complex(_qp(q * t[j] ** 2 / b, q))
    return 1.0 + 0j


# ---------------------------------------------------------------------------
# dispatch


@dataclass(frozen=True)
class LimitRegime:
    tag: str
    special: int | None = None


def classify_limit(exponents: LimitExponents) -> LimitRegime:
    """Which limit formula applies to the exponents (up to permutation of tau)."""
    if not exponents.in_polytope(1e-12):
        return LimitRegime(OUTSIDE)
    beta, tau = exponents.beta, list(exponents.tau)
    if abs(beta - 1) < _EXP_TOL:
        return LimitRegime(B1_VERTEX)
    if beta > _EXP_TOL:
        tag, j = _mid_case(tau, beta)
        return LimitRegime(tag, j)
    i = _edge_index(tau, True)
    if i is not None:
        return LimitRegime(B0_EDGE_NEG, i)
    i = _edge_index(tau, False)
    if i is not None:
        return LimitRegime(B0_EDGE_POS, i)
    return LimitRegime(B0_INTERIOR)


def limit_value(b, t: Sequence[complex], q, exponents: LimitExponents,
                cfg: QuadratureConfig | None = None, diag=None) -> complex:
    """The p -> 0 limit of E(b p^beta; t_r p^{tau_r}; p, q)."""
    regime = classify_limit(exponents)
    if regime.tag == OUTSIDE:
        raise OutsidePolytope(f"exponents outside the polytope: {exponents}")
    if regime.tag == B1_VERTEX:
        return b1_integral(b, t, q, cfg, diag)
    if regime.tag.startswith("MID"):
        return mid_beta_limit(b, t, q, exponents)
    if regime.tag == B0_INTERIOR:
        return limit_b0_interior(b, t, q, exponents, cfg, diag)
    return limit_b0_edge(b, t, q, exponents, cfg, diag)


def elliptic_at_exponents(b, t: Sequence[complex], q, exponents: LimitExponents, p: float,
                          cfg: QuadratureConfig | None = None, diag=None) -> complex:
    """E(b p^beta; t_r p^{tau_r}; p, q), moving along the W(F4) orbit if the
    scaled parameters admit no separating circle."""
    base = EllipticBase(p, q)
    scaled = [complex(x) * p ** e for x, e in zip(t, exponents.tau)]
    params = F4IntegralParams(complex(b) * p ** exponents.beta, tuple(scaled), base)
    return e_f4(params, cfg, diag)
