"""Basic hypergeometric series r+1phi_r and very-well-poised r+1W_r."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DivergentDenominator, DomainError, NonConvergent
from .special_functions import TruncationPolicy, qpoch_inf

# Consecutive small terms required before a non-terminating sum stops.
_QUIET_TERMS = 3
_MATCH_TOL = 1e-12


@dataclass(frozen=True)
class PhiSeriesSpec:
    numerators: tuple
    denominators: tuple
    q: complex
    z: complex

    def __post_init__(self):
        object.__setattr__(self, "numerators", tuple(complex(a) for a in self.numerators))
        object.__setattr__(self, "denominators", tuple(complex(b) for b in self.denominators))
        object.__setattr__(self, "q", complex(self.q))
        object.__setattr__(self, "z", complex(self.z))
        if len(self.numerators) != len(self.denominators) + 1:
            raise DomainError(
                f"need r+1 numerators over r denominators, got "
                f"{len(self.numerators)}/{len(self.denominators)}")


@dataclass(frozen=True)
class SeriesResult:
    value: complex
    terms_used: int
    terminated: bool
    tail_estimate: float
    terms: tuple = field(default=(), repr=False)


def _termination_index(a: complex, q: complex) -> int | None:
    """n if a == q^{-n} (to relative _MATCH_TOL), else None."""
    if a == 0 or q == 0 or abs(q) >= 1:
        return None
    n_est = -cmath.log(a).real / math.log(abs(q))
    n = round(n_est)
    if n < 0:
        return None
    target = q ** (-n)
    if abs(a - target) < _MATCH_TOL * abs(target):
        return n
    return None


def sum_phi(spec: PhiSeriesSpec, policy: TruncationPolicy | None = None, keep_terms: bool = False) -> SeriesResult:
    """Sum the series term by term from the ratio recurrence.

    Stops when a numerator of the form q^{-n} kills the next term, or once
    three consecutive terms fall below ``tol * |partial sum|``.
    """
    policy = policy or TruncationPolicy(tol=1e-17)
    q, z = spec.q, spec.z
    if abs(q) >= 1:
        raise NonConvergent(f"series needs |q| < 1, got {abs(q)}")

    stops = [n for n in (_termination_index(a, q) for a in spec.numerators) if n is not None]
    stop_at = min(stops) if stops else None

    total = 0j
    comp = 0j
    term = 1.0 + 0j
    quiet = 0
    kept = []
    for k in range(policy.max_terms):
        # Kahan-compensated accumulation keeps long sums order-stable.
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        if keep_terms:
            kept.append(term)

        if stop_at is not None and k == stop_at:
            return SeriesResult(total, k + 1, True, 0.0, tuple(kept))

        qk = q ** k
        den = 1.0 + 0j
        for b in spec.denominators:
            factor = 1 - b * qk
            if abs(factor) < _MATCH_TOL * max(1.0, abs(b * qk)):
                raise DivergentDenominator(f"denominator parameter {b} equals q^-{k}")
            den *= factor
        num = 1.0 + 0j
        for a in spec.numerators:
            num *= 1 - a * qk
        term = term * num / (den * (1 - q ** (k + 1))) * z

        if term == 0:
            # z = 0, or an exact numerator zero the matcher did not flag
            return SeriesResult(total, k + 1, z != 0, 0.0, tuple(kept))
        if abs(term) < policy.tol * abs(total):
            quiet += 1
            if quiet >= _QUIET_TERMS:
                return SeriesResult(total, k + 1, False, abs(term), tuple(kept))
        else:
            quiet = 0
    raise NonConvergent(f"series did not settle within {policy.max_terms} terms")


def vwp_spec(a, b: Sequence, q, z) -> PhiSeriesSpec:
    """Expand r+1W_r(a; b_1..b_{r-2}; q, z) into its phi form."""
    a, q = complex(a), complex(q)
    sa = cmath.sqrt(a)
    numerators = [a, q * sa, -q * sa, *b]
    denominators = [sa, -sa, *(a * q / complex(bj) for bj in b)]
    return PhiSeriesSpec(numerators, denominators, q, z)


def sum_vwp_w(a, b: Sequence, q, z, policy: TruncationPolicy | None = None, keep_terms: bool = False) -> SeriesResult:
    """Very-well-poised series; the +-sqrt(a) pairs make the branch irrelevant."""
    return sum_phi(vwp_spec(a, b, q, z), policy, keep_terms)


def w14_13_value(b, t: Sequence, q, policy: TruncationPolicy | None = None) -> complex:
    """Series form of the vertex integral:

        prod_{r<s} (b t_r t_s;q) (qb^2, b^2, T^2;q)/(qb, bT^2;q)
            * 14W13(bT^2/q; t_r t_s (6), q/b, +-bT/sqrt(q), +-bT; q, b^2)

    with T = sqrt(t1 t2 t3 t4).  Needs |b| < 1.
    """
    b, q = complex(b), complex(q)
    t = [complex(x) for x in t]
    if len(t) != 4:
        raise DomainError("w14_13_value takes four t parameters")
    if abs(b) >= 1:
        raise NonConvergent("14W13 argument b^2 must lie inside the unit disc")
    T = cmath.sqrt(t[0] * t[1] * t[2] * t[3])
    pairs = [t[r] * t[s] for r in range(4) for s in range(r + 1, 4)]
    pre = 1.0 + 0j
    for x in pairs:
        pre *= qpoch_inf(b * x, q)
    pre *= qpoch_inf(q * b * b, q) * qpoch_inf(b * b, q) * qpoch_inf(T * T, q)
    pre /= qpoch_inf(q * b, q) * qpoch_inf(b * T * T, q)
    if b == 0:
        return pre
    sq = cmath.sqrt(q)
    params = [*pairs, q / b, b * T / sq, -b * T / sq, b * T, -b * T]
    return pre * sum_vwp_w(b * T * T / q, params, q, b * b, policy).value
