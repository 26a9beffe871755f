"""Series representations of the limiting integrals and the evaluations they imply."""

from __future__ import annotations

import cmath
from typing import Sequence

import numpy as np

from ..errors import DomainError
from ..quadrature import QuadratureConfig
from ..series import PhiSeriesSpec, sum_phi, sum_vwp_w, w14_13_value
from ..special_functions import TruncationPolicy, qpoch_finite, qpoch_inf
from .limits import aw_type_integral

__all__ = [
    "series_rep_edge_4phi3",
    "series_rep_octahedron_2phi1",
    "interior_identity_check",
    "w8_7_evaluation_check",
    "w8_7_closed_form",
    "w8_7_explicit_terms",
    "w8_7_expansion_terms",
    "edge_w14_13_series",
    "edge_phi_series",
    "w14_13_value",
]


def _qprod(values, q) -> complex:
    values = list(values)
    if not values:
        return 1.0 + 0j
    return complex(np.prod(qpoch_inf(np.array(values, dtype=complex), q)))


def series_rep_edge_4phi3(b, t: Sequence[complex], q, policy: TruncationPolicy | None = None) -> complex:
    """prod_{r<s} (b t_r t_s;q) (qb^2, b^2;q)/(qb;q)
       * 4phi3(t1t2, t1t3, t2t3, q/b; b t1t2, b t1t3, b t2t3; q, b^2)."""
    b, q = complex(b), complex(q)
    t = [complex(x) for x in t]
    if len(t) != 3:
        raise DomainError("the edge series takes three t parameters")
    pairs = [t[0] * t[1], t[0] * t[2], t[1] * t[2]]
    pre = _qprod([b * x for x in pairs] + [q * b * b, b * b], q) / qpoch_inf(q * b, q)
    if b == 0:
        return pre
    spec = PhiSeriesSpec(pairs + [q / b], [b * x for x in pairs], q, b * b)
    return pre * sum_phi(spec, policy).value


def series_rep_octahedron_2phi1(b, t, v, q, policy: TruncationPolicy | None = None) -> complex:
    """(b t v, qb^2, b^2;q)/(qb;q) * 2phi1(tv, q/b; btv; q, b^2)."""
    b, q = complex(b), complex(q)
    tv = complex(t) * complex(v)
    pre = _qprod([b * tv, q * b * b, b * b], q) / qpoch_inf(q * b, q)
    if b == 0:
        return pre
    return pre * sum_phi(PhiSeriesSpec([tv, q / b], [b * tv], q, b * b), policy).value


def interior_identity_check(b, t, q, cfg: QuadratureConfig | None = None) -> float:
    """Relative residual of (qb^2;q) against the one-parameter integral."""
    b, q = complex(b), complex(q)
    lhs = qpoch_inf(q * b * b, q)
    rhs = aw_type_integral(b, [t], q, cfg)
    return abs(lhs - rhs) / abs(lhs)


def w8_7_closed_form(b, t, q) -> complex:
    """(qb^2, b^2 t^2;q)/(b^3 t^2, qb;q)."""
    b, t, q = complex(b), complex(t), complex(q)
    return _qprod([q * b * b, b * b * t * t], q) / _qprod([b ** 3 * t * t, q * b], q)


def _w8_7_params(b, t, q):
    b, t, q = complex(b), complex(t), complex(q)
    sb, sbq = cmath.sqrt(b), cmath.sqrt(b / q)
    return b * b * t * t / q, [t * sb, -t * sb, t * sbq, -t * sbq, b]


def w8_7_evaluation_check(b, t, q, policy: TruncationPolicy | None = None) -> float:
    """Relative residual of 8W7(b^2t^2/q; +-t sqrt(b), +-t sqrt(b/q), b; q, qb) vs its closed form."""
    b, t, q = complex(b), complex(t), complex(q)
    if t == 0:
        # a = 0 collapses the very-well-poised pairs; the t -> 0 limit is 1phi0(b; q, qb)
        series = sum_phi(PhiSeriesSpec([b], [], q, q * b), policy).value
    else:
        a, params = _w8_7_params(b, t, q)
        series = sum_vwp_w(a, params, q, q * b, policy).value
    closed = w8_7_closed_form(b, t, q)
    return abs(series - closed) / abs(closed)


def w8_7_explicit_terms(b, t, q, kmax: int) -> list:
    """Terms k = 0..kmax of the collapsed form

        (1 - b^2t^2 q^{2k-1})/(1 - b^2t^2/q) (b^2t^2/q, b;q)_k (bt^2/q;q)_{2k}
            / ((q, bt^2;q)_k (b^3t^2;q)_{2k}) (bq)^k.
    """
    b, t, q = complex(b), complex(t), complex(q)
    a = b * b * t * t / q
    out = []
    for k in range(kmax + 1):
        num = (1 - a * q ** (2 * k)) / (1 - a)
        num *= qpoch_finite(a, q, k) * qpoch_finite(b, q, k) * qpoch_finite(b * t * t / q, q, 2 * k)
        den = qpoch_finite(q, q, k) * qpoch_finite(b * t * t, q, k) * qpoch_finite(b ** 3 * t * t, q, 2 * k)
        out.append(num / den * (b * q) ** k)
    return out


def w8_7_expansion_terms(b, t, q, kmax: int) -> list:
    """Terms k = 0..kmax of the 8W7 as produced by the series summer."""
    a, params = _w8_7_params(b, t, q)
    res = sum_vwp_w(a, params, complex(q), complex(q) * complex(b), keep_terms=True)
    terms = list(res.terms)
    if len(terms) < kmax + 1:
        raise DomainError(f"series stopped after {len(terms)} terms")
    return terms[:kmax + 1]


def edge_w14_13_series(b, t1, others: Sequence[complex], q, policy: TruncationPolicy | None = None) -> complex:
    """prod_{r>=2} (b t1 t_r, q t1/t_r;q) (qb^2, b^2, q t1^2/b;q)/(qb, q t1^2;q)
       * 14W13(t1^2; t1 t_r, q t1/(b t_r) (r = 2..4), q/b, +-sqrt(b) t1, +-sqrt(bq) t1; q, b^2)."""
    b, t1, q = complex(b), complex(t1), complex(q)
    others = [complex(x) for x in others]
    if len(others) != 3:
        raise DomainError("edge_w14_13_series takes three further parameters")
    pre = _qprod([b * t1 * x for x in others] + [q * t1 / x for x in others], q)
    pre *= _qprod([q * b * b, b * b, q * t1 * t1 / b], q) / _qprod([q * b, q * t1 * t1], q)
    params = []
    for x in others:
        params += [t1 * x, q * t1 / (b * x)]
    sb, sbq = cmath.sqrt(b), cmath.sqrt(b * q)
    params += [q / b, sb * t1, -sb * t1, sbq * t1, -sbq * t1]
    return pre * sum_vwp_w(t1 * t1, params, q, b * b, policy).value


def edge_phi_series(b, t1, u: Sequence[complex], q, policy: TruncationPolicy | None = None) -> complex:
    """prod_r (b u_r t1;q) (qb^2, b^2;q)/(qb;q) * (k+1)phi(k)(t1 u_r, q/b; b u_r t1; q, b^2)."""
    b, t1, q = complex(b), complex(t1), complex(q)
    u = [complex(x) for x in u]
    pre = _qprod([b * x * t1 for x in u] + [q * b * b, b * b], q) / qpoch_inf(q * b, q)
    spec = PhiSeriesSpec([t1 * x for x in u] + [q / b], [b * x * t1 for x in u], q, b * b)
    return pre * sum_phi(spec, policy).value
