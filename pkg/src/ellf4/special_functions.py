"""q-shifted factorials, theta functions and the elliptic gamma function.

All evaluators accept a complex scalar or a numpy array of arguments and
return an object of the same shape.  Infinite products are truncated with
an a-priori length taken from the geometric tail, so the work per call is
known before any multiplication happens.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainError,
    NonConvergent,
    PoleError,
    TruncationBudgetExceeded,
)

DEFAULT_TOL = 1e-16
DEFAULT_MAX_TERMS = 100_000
POLE_REL_TOL = 1e-10

# Upper bound on (#arguments x #factors) materialised at once.
_CHUNK = 1 << 21


@dataclass(frozen=True)
class TruncationPolicy:
    tol: float = DEFAULT_TOL
    max_terms: int = DEFAULT_MAX_TERMS

    def __post_init__(self):
        if not self.tol > 0:
            raise DomainError(f"tol must be positive, got {self.tol!r}")
        if self.max_terms < 1:
            raise DomainError(f"max_terms must be >= 1, got {self.max_terms!r}")


DEFAULT_POLICY = TruncationPolicy()


@dataclass(frozen=True)
class EllipticBase:
    """The pair of nomes ``(p, q)`` together with a truncation policy."""

    p: complex
    q: complex
    tol: float = DEFAULT_TOL
    max_terms: int = DEFAULT_MAX_TERMS

    def __post_init__(self):
        object.__setattr__(self, "p", complex(self.p))
        object.__setattr__(self, "q", complex(self.q))
        if not (abs(self.p) < 1 and abs(self.q) < 1):
            raise DomainError(f"need |p|, |q| < 1, got p={self.p}, q={self.q}")
        TruncationPolicy(self.tol, self.max_terms)

    @property
    def policy(self) -> TruncationPolicy:
        return TruncationPolicy(self.tol, self.max_terms)

    @property
    def pq(self) -> complex:
        return self.p * self.q

    def swapped(self) -> "EllipticBase":
        return EllipticBase(self.q, self.p, self.tol, self.max_terms)


def _policy(policy: TruncationPolicy | None) -> TruncationPolicy:
    return DEFAULT_POLICY if policy is None else policy


def _as_array(x):
    arr = np.asarray(x, dtype=complex)
    return arr, arr.ndim == 0


def _out(arr, scalar):
    return complex(arr) if scalar else arr


def _product_over(x: np.ndarray, factors: np.ndarray) -> np.ndarray:
    """prod_k (1 - x * factors[k]) elementwise in x, chunked to bound memory."""
    flat = x.reshape(-1)
    out = np.empty(flat.shape, dtype=complex)
    step = max(1, _CHUNK // max(1, factors.size))
    for start in range(0, flat.size, step):
        block = flat[start:start + step]
        out[start:start + step] = np.prod(1.0 - block[:, None] * factors[None, :], axis=1)
    return out.reshape(x.shape)


def truncation_length(xmax: float, ratio: float, policy: TruncationPolicy | None = None) -> int:
    """Number of factors N with ``xmax * ratio**N < tol * (1 - ratio)``."""
    policy = _policy(policy)
    if ratio >= 1:
        raise NonConvergent(f"product base has modulus {ratio} >= 1")
    if xmax == 0 or ratio == 0:
        return 1
    bound = policy.tol * (1.0 - ratio)
    if xmax < bound:
        return 1
    n = max(1, math.ceil(math.log(bound / xmax) / math.log(ratio)))
    if n > policy.max_terms:
        raise TruncationBudgetExceeded(
            f"need {n} factors (max_terms={policy.max_terms}) at |x|={xmax:.3g}, ratio={ratio:.3g}")
    return n


def _log_tail(xmod: float, powers: np.ndarray) -> float:
    """Bound on |log| of the omitted factors prod (1 - x*g), g in powers."""
    terms = xmod * np.abs(powers)
    if terms.size == 0:
        return 0.0
    if np.max(terms) >= 1:
        return math.inf
    return float(np.sum(terms / (1.0 - terms)))


def qpoch_finite(x, q, m: int):
    """(x;q)_m = (1-x)(1-xq)...(1-xq^{m-1}); ``m = 0`` gives exactly 1."""
    if m < 0:
        raise DomainError(f"m must be >= 0, got {m}")
    arr, scalar = _as_array(x)
    if m == 0:
        return _out(np.ones_like(arr), scalar)
    powers = complex(q) ** np.arange(m)
    return _out(_product_over(arr, powers), scalar)


def qpoch_inf(x, q, policy: TruncationPolicy | None = None, return_error: bool = False):
    """Infinite q-shifted factorial (x;q)_inf.

    With ``return_error=True`` also returns a bound on the relative
    truncation error (the log-tail of the omitted factors).
    """
    q = complex(q)
    if abs(q) >= 1:
        raise NonConvergent(f"(x;q)_inf needs |q| < 1, got |q|={abs(q)}")
    arr, scalar = _as_array(x)
    xmax = float(np.max(np.abs(arr))) if arr.size else 0.0
    n = truncation_length(xmax, abs(q), policy)
    powers = q ** np.arange(n)
    value = _out(_product_over(arr, powers), scalar)
    if not return_error:
        return value
    tail = _log_tail(xmax, q ** np.arange(n, n + 64)) if abs(q) > 0 else 0.0
    return value, math.expm1(tail) if math.isfinite(tail) else math.inf


def _pq_grid(xmax: float, p: complex, q: complex, policy: TruncationPolicy):
    """Exponent pairs (r, s) with r + s < D, truncated along diagonals."""
    m = max(abs(p), abs(q))
    if m >= 1:
        raise NonConvergent(f"(x;p,q) needs |p|, |q| < 1, got {abs(p)}, {abs(q)}")
    if m == 0 or xmax == 0:
        return np.array([1.0 + 0j]), 1
    bound = policy.tol * (1.0 - m) ** 2
    d = 1
    while xmax * (d + 1) * m ** d >= bound:
        d += 1
        if d > policy.max_terms:
            raise TruncationBudgetExceeded(
                f"(x;p,q) needs more than {policy.max_terms} diagonals at |x|={xmax:.3g}")
    r, s = np.meshgrid(np.arange(d), np.arange(d), indexing="ij")
    keep = (r + s) < d
    r, s = r[keep], s[keep]
    with np.errstate(divide="ignore", invalid="ignore"):
        grid = np.where(r == 0, 1.0, p ** r) * np.where(s == 0, 1.0, q ** s)
    grid = grid[grid != 0]
    return grid.astype(complex), d


def pq_poch(x, base: EllipticBase, return_error: bool = False):
    """Double product (x;p,q) = prod_{r,s>=0} (1 - x p^r q^s)."""
    arr, scalar = _as_array(x)
    xmax = float(np.max(np.abs(arr))) if arr.size else 0.0
    grid, d = _pq_grid(xmax, base.p, base.q, base.policy)
    value = _out(_product_over(arr, grid), scalar)
    if not return_error:
        return value
    m = max(abs(base.p), abs(base.q))
    tail = xmax * sum((k + 1) * m ** k for k in range(d, d + 200)) if m else 0.0
    return value, math.expm1(tail) if tail < 1 else math.inf


def theta(x, p, policy: TruncationPolicy | None = None):
    """theta(x;p) = (x;p)(p/x;p)."""
    arr, scalar = _as_array(x)
    if np.any(arr == 0):
        raise DomainError("theta(x;p) is undefined at x = 0")
    p = complex(p)
    value = qpoch_inf(arr, p, policy) * qpoch_inf(p / arr, p, policy)
    return _out(value, scalar)


def _lattice_hits(x: np.ndarray, p: complex, q: complex, rel: float = POLE_REL_TOL) -> np.ndarray:
    """Mask of x within ``rel*|x|`` of some p^{-j} q^{-k}, j, k >= 0."""
    hits = np.zeros(x.shape, dtype=bool)
    xmax = float(np.max(np.abs(x))) if x.size else 0.0
    limit = 2.0 * xmax
    pj = 1.0 + 0j
    while abs(pj) <= limit:
        qk = 1.0 + 0j
        while abs(pj * qk) <= limit:
            point = pj * qk
            hits |= np.abs(x - point) < rel * np.abs(x)
            if q == 0:
                break
            qk = qk / q
        if p == 0:
            break
        pj = pj / p
    return hits


def elliptic_gamma(x, base: EllipticBase, check_poles: bool = True):
    """Elliptic gamma function Gamma(x;p,q) = (pq/x;p,q) / (x;p,q)."""
    arr, scalar = _as_array(x)
    if np.any(arr == 0):
        raise DomainError("elliptic gamma is undefined at x = 0")
    if check_poles and np.any(_lattice_hits(arr, base.p, base.q)):
        raise PoleError(f"elliptic gamma evaluated at a pole x in p^-j q^-k: {arr[_lattice_hits(arr, base.p, base.q)]}")
    value = pq_poch(base.pq / arr, base) / pq_poch(arr, base)
    return _out(value, scalar)


def elliptic_gamma_reciprocal(x, base: EllipticBase):
    """1/Gamma(x;p,q) = (x;p,q) / (pq/x;p,q); finite at the poles of Gamma."""
    arr, scalar = _as_array(x)
    if np.any(arr == 0):
        raise DomainError("elliptic gamma is undefined at x = 0")
    return _out(pq_poch(arr, base) / pq_poch(base.pq / arr, base), scalar)


def riemann_theta_addition_sides(b, w, z, q, policy: TruncationPolicy | None = None) -> tuple:
    """Both sides of the theta addition identity

        theta(bwz, w/(bz), b/z^2) / theta(w z^{+-1}, 1/z^2)  +  (z -> 1/z)
            = theta(b^2) / theta(b)            (all thetas in base q).
    """
    b, w, z, q = complex(b), complex(w), complex(z), complex(q)
    if z == 0 or b == 0 or w == 0:
        raise DomainError("b, w and z must be nonzero")
    if abs(z * z - 1) < 1e-12:
        raise DomainError("z^2 = 1 makes theta(1/z^2) vanish")

    def half(zz):
        den = theta(w * zz, q, policy) * theta(w / zz, q, policy) * theta(1 / zz ** 2, q, policy)
        if den == 0:
            raise DomainError(f"degenerate denominator at z={zz}")
        return theta(b * w * zz, q, policy) * theta(w / (b * zz), q, policy) * theta(b / zz ** 2, q, policy) / den

    rhs_den = theta(b, q, policy)
    if rhs_den == 0:
        raise DomainError("theta(b;q) vanishes")
    return half(z) + half(1 / z), theta(b * b, q, policy) / rhs_den


def riemann_theta_addition_check(b, w, z, q, policy: TruncationPolicy | None = None) -> float:
    """Relative residual |LHS - RHS| / |RHS| of the theta addition identity."""
    lhs, rhs = riemann_theta_addition_sides(b, w, z, q, policy)
    return abs(lhs - rhs) / abs(rhs)
