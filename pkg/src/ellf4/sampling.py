"""Seeded generators of admissible parameter points.

Moduli are log-uniform in [0.2, 0.8] and phases uniform; a point is kept
only if every inward pole family stays at least ``margin`` inside the unit
circle (so the outward families stay outside it as well).
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .beta_integrals.elliptic import BetaParams, F4IntegralParams, beta_catalog, f4_transform, inward_reach
from .errors import DomainError
from .special_functions import EllipticBase

MOD_LO, MOD_HI = 0.2, 0.8
DEFAULT_MARGIN = 0.05
_MAX_TRIES = 10_000


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def log_uniform(rng: np.random.Generator, lo: float = MOD_LO, hi: float = MOD_HI) -> float:
    return float(math.exp(rng.uniform(math.log(lo), math.log(hi))))


def random_complex(rng: np.random.Generator, lo: float = MOD_LO, hi: float = MOD_HI, real: bool = False) -> complex:
    r = log_uniform(rng, lo, hi)
    if real:
        return complex(r)
    return r * cmath.exp(2j * math.pi * rng.uniform())


def random_base(rng: np.random.Generator, pmax: float = 0.5, qmax: float = 0.5, lo: float = 0.05) -> EllipticBase:
    """Complex nomes with moduli log-uniform in [lo, max]."""
    return EllipticBase(random_complex(rng, lo, pmax), random_complex(rng, lo, qmax))


def _tries():
    for _ in range(_MAX_TRIES):
        yield
    raise DomainError(f"no admissible point after {_MAX_TRIES} draws")


def random_balanced(rng: np.random.Generator, base: EllipticBase, m: int,
                    margin: float = DEFAULT_MARGIN) -> BetaParams:
    """2m+6 parameters with prod t = (pq)^{m+1}; the last one is solved for."""
    for _ in _tries():
        free = [random_complex(rng) for _ in range(2 * m + 5)]
        params = BetaParams.balanced(free, base)
        if beta_catalog(params.t, base).inward_max <= 1 - margin:
            return params


def random_f4_point(rng: np.random.Generator, base: EllipticBase, spread: float = 0.6,
                    margin: float = DEFAULT_MARGIN, whole_orbit: bool = False) -> F4IntegralParams:
    """(b, t) around the fixed point sqrt(pq/b) of the multiplicative action.

    t_r = sqrt(A) exp(u_r + i phi_r) with |u_r| <= spread.  The point and its
    image under t -> tv must both admit the unit circle.  With
    ``whole_orbit`` every W(F4) image must: the orbit of log|t| - log|sqrt A|
    stays on a sphere, so its Euclidean norm bounds every image.
    """
    for _ in _tries():
        b = random_complex(rng)
        sa = cmath.sqrt(base.pq / b)
        u = rng.uniform(-spread, spread, 4)
        phases = rng.uniform(0, 2 * math.pi, 4)
        t = tuple(sa * cmath.exp(complex(x, y)) for x, y in zip(u, phases))
        params = F4IntegralParams(b, t, base)
        if params.denominator_is_zero():
            continue
        if whole_orbit:
            if abs(sa) * math.exp(float(np.linalg.norm(u))) > 1 - margin or abs(b) ** 0.5 > 1 - margin:
                continue
        elif max(inward_reach(params), inward_reach(f4_transform(params))) > 1 - margin:
            continue
        return params


def random_theta_point(rng: np.random.Generator, qmax: float = 0.5) -> tuple:
    """(b, w, z, q) for the theta addition identity, z kept off z^2 = 1."""
    for _ in _tries():
        b, w = random_complex(rng), random_complex(rng)
        z = random_complex(rng, 0.5, 2.0)
        q = random_complex(rng, 0.05, qmax)
        if abs(z * z - 1) > DEFAULT_MARGIN:
            return b, w, z, q
