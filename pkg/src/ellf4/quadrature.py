"""Contour integrals over origin-centred circles.

Every integral in this package has the form of the constant term
``oint f(z) dz / (2 pi i z)``.  On a circle this is the mean of ``f`` over
the circle, and for integrands analytic in an annulus around the circle
the equispaced (trapezoid) rule converges geometrically.  Sample counts
double until two successive estimates agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import DomainError, NoConvergence
from .special_functions import EllipticBase

# Factor kinds understood by gamma_pole_catalog.
GAMMA_OF_CZ = "gamma(cz)"          # elliptic Gamma(c z^k): poles at z^k = c^-1 p^-j q^-l
GAMMA_OF_C_OVER_Z = "gamma(c/z)"   # elliptic Gamma(c z^-k): poles at z^k = c p^j q^l
QPOCH_DEN_CZ = "1/(cz;q)"          # 1/(c z^k;q): poles at z^k = c^-1 q^-l
QPOCH_DEN_C_OVER_Z = "1/(c/z;q)"   # 1/(c z^-k;q): poles at z^k = c q^l

# Accept a stalled doubling sequence once its change is below this relative size.
_FLOOR_REL = 1e-9

_OUTWARD_KINDS = (GAMMA_OF_CZ, QPOCH_DEN_CZ)
_INWARD_KINDS = (GAMMA_OF_C_OVER_Z, QPOCH_DEN_C_OVER_Z)


@dataclass(frozen=True)
class CircleContour:
    """Positively oriented circle |z| = radius."""

    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise DomainError(f"contour radius must be positive, got {self.radius}")


@dataclass(frozen=True)
class QuadratureConfig:
    n_start: int = 64
    n_max: int = 1 << 16
    rel_tol: float = 1e-13

    def __post_init__(self):
        if self.n_start < 16 or self.n_start & (self.n_start - 1):
            raise DomainError(f"n_start must be a power of two >= 16, got {self.n_start}")
        if self.n_max < self.n_start:
            raise DomainError("n_max must be >= n_start")
        if not self.rel_tol > 0:
            raise DomainError("rel_tol must be positive")


DEFAULT_CONFIG = QuadratureConfig()


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    err_estimate: float
    n_used: int
    radius: float = 1.0

    def __iter__(self):
        # allows ``value, err, n = integrate_circle(...)``
        return iter((self.value, self.err_estimate, self.n_used))


def _fsum_complex(values: np.ndarray) -> complex:
    return complex(math.fsum(values.real), math.fsum(values.imag))


def _periodic_mean(h: Callable[[np.ndarray], np.ndarray], cfg: QuadratureConfig) -> QuadratureResult:
    """Mean of h over the N-th roots of unity, doubling N until stable.

    Samples already evaluated are reused: the step to 2N only evaluates
    the N new odd-indexed points.
    """
    n = cfg.n_start
    w = np.exp(2j * np.pi * np.arange(n) / n)
    total = _fsum_complex(np.asarray(h(w), dtype=complex))
    value = total / n
    scale = 0.0
    prev_err = math.inf
    while True:
        w_new = np.exp(2j * np.pi * (np.arange(n) + 0.5) / n)
        samples = np.asarray(h(w_new), dtype=complex)
        scale = max(scale, float(np.mean(np.abs(samples))))
        total += _fsum_complex(samples)
        n *= 2
        new_value = total / n
        err = abs(new_value - value)
        value = new_value
        if not math.isfinite(err):
            raise NoConvergence("integrand produced non-finite samples on the contour")
        if err <= cfg.rel_tol * abs(value) or err <= 1e-15 * scale:
            return QuadratureResult(value, err, n)
        # geometric convergence halves the error at least once per doubling;
        # an estimate that stalls at a small level is the roundoff floor
        if err > 0.5 * prev_err and err <= _FLOOR_REL * abs(value):
            return QuadratureResult(value, err, n)
        prev_err = err
        if 2 * n > cfg.n_max:
            raise NoConvergence(
                f"trapezoid rule not converged at N={n}: diff {err:.3g} vs |value| {abs(value):.3g}; "
                "a pole is probably too close to the contour")


def integrate_circle(f: Callable[[np.ndarray], np.ndarray], contour: CircleContour | float = 1.0,
                     cfg: QuadratureConfig | None = None) -> QuadratureResult:
    """oint_{|z|=rho} f(z) dz / (2 pi i z), with f vectorised over numpy arrays."""
    if not isinstance(contour, CircleContour):
        contour = CircleContour(float(contour))
    rho = contour.radius
    res = _periodic_mean(lambda w: f(rho * w), cfg or DEFAULT_CONFIG)
    return QuadratureResult(res.value, res.err_estimate, res.n_used, rho)


def residue_numeric(f: Callable[[np.ndarray], np.ndarray], pole: complex, small_radius: float,
                    cfg: QuadratureConfig | None = None) -> complex:
    """oint f(z) dz / (2 pi i) around a small circle centred at ``pole``."""
    if not small_radius > 0:
        raise DomainError("small_radius must be positive")
    pole = complex(pole)
    res = _periodic_mean(lambda w: f(pole + small_radius * w) * small_radius * w, cfg or DEFAULT_CONFIG)
    return res.value


@dataclass(frozen=True)
class PoleFactor:
    """One integrand factor whose poles constrain the contour.

    ``power`` is the power of z inside the factor, e.g. 2 for Gamma(b z^2).
    """

    coefficient: complex
    kind: str
    power: int = 1
    source: str = ""


@dataclass(frozen=True)
class Pole:
    location: complex
    source: str


@dataclass(frozen=True)
class PoleCatalog:
    inward: tuple = field(default=())
    outward: tuple = field(default=())

    @property
    def inward_max(self) -> float:
        return max((abs(p.location) for p in self.inward), default=0.0)

    @property
    def outward_min(self) -> float:
        return min((abs(p.location) for p in self.outward), default=math.inf)


def _family(c: complex, kind: str, power: int, base: EllipticBase | None, q: complex | None,
            lo: float, hi: float, source: str) -> list:
    """Pole locations of a single factor with modulus in [lo, hi] plus generation 0."""
    if c == 0:
        return []
    if kind in (GAMMA_OF_CZ, GAMMA_OF_C_OVER_Z):
        steps = [base.p, base.q]
    else:
        steps = [q if q is not None else base.q]
    steps = [s for s in steps if s != 0]
    out = []
    # lattice points lam = prod steps^{n_i}; z^power = c^{-1}/lam (outward) or c*lam (inward)
    frontier = [((0,) * len(steps), 1.0 + 0j)]
    seen = {frontier[0][0]}
    while frontier:
        idx, lam = frontier.pop()
        w = c * lam if kind in _INWARD_KINDS else 1.0 / (c * lam)
        rmod = abs(w) ** (1.0 / power)
        generation0 = not any(idx)
        if generation0 or lo <= rmod <= hi:
            root = w ** (1.0 / power)
            for m in range(power):
                out.append(Pole(root * np.exp(2j * np.pi * m / power), source))
        inside_window = rmod >= lo if kind in _INWARD_KINDS else rmod <= hi
        if not inside_window:
            continue
        for i, s in enumerate(steps):
            nxt = tuple(n + (j == i) for j, n in enumerate(idx))
            if nxt not in seen:
                seen.add(nxt)
                frontier.append((nxt, lam * s))
    return out


def gamma_pole_catalog(factors: Iterable[PoleFactor], base: EllipticBase | None = None,
                       radius: float = 1.0, q: complex | None = None) -> PoleCatalog:
    """Enumerate pole families of the given factors near a circle.

    Families of ``Gamma(c z)`` and ``1/(c z;q)`` must stay outside the
    contour; those of ``Gamma(c/z)`` and ``1/(c/z;q)`` inside.  Only poles
    with modulus in [radius/4, 4 radius] are retained, plus the j = k = 0
    generation which decides separation on its own.
    """
    inward, outward = [], []
    lo, hi = radius / 4.0, radius * 4.0
    for fac in factors:
        poles = _family(complex(fac.coefficient), fac.kind, fac.power, base, q, lo, hi,
                        fac.source or f"{fac.kind}[{fac.coefficient}]")
        (inward if fac.kind in _INWARD_KINDS else outward).extend(poles)
    return PoleCatalog(tuple(inward), tuple(outward))


def select_radius(catalog_builder: Callable[[float], PoleCatalog] | PoleCatalog) -> float | None:
    """Radius strictly between the inward and outward pole families.

    Returns the geometric mean of the largest inward and the smallest
    outward modulus, or None when no origin-centred circle separates them.
    """
    catalog = catalog_builder(1.0) if callable(catalog_builder) else catalog_builder
    lo, hi = catalog.inward_max, catalog.outward_min
    if lo >= hi:
        return None
    if lo == 0 and math.isinf(hi):
        return 1.0
    if lo == 0:
        return hi / 2.0
    if math.isinf(hi):
        return 2.0 * lo
    return math.sqrt(lo * hi)


def separation_ratio(catalog: PoleCatalog) -> float:
    """outward_min / inward_max; > 1 iff a separating circle exists."""
    lo, hi = catalog.inward_max, catalog.outward_min
    if lo == 0:
        return math.inf
    return hi / lo


def even_pm_factors(coefficients: Sequence[complex], gamma: bool = True, source: str = "") -> list:
    """Factors for prod Gamma(c z^{+-1}) (or prod 1/(c z^{+-1};q))."""
    kinds = (GAMMA_OF_CZ, GAMMA_OF_C_OVER_Z) if gamma else (QPOCH_DEN_CZ, QPOCH_DEN_C_OVER_Z)
    out = []
    for c in coefficients:
        out.append(PoleFactor(c, kinds[0], 1, source or f"c={c}"))
        out.append(PoleFactor(c, kinds[1], 1, source or f"c={c}"))
    return out
