"""The F4 root system, its Weyl group, and the two actions used on parameters.

Group elements are 4x4 rational matrices whose entries are multiples of
1/2.  They are stored exactly as integer matrices equal to twice the
rational matrix, so products, equality and hashing never touch floating
point.
"""

from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError

Vector = tuple  # 4-tuple of Fractions

VERTEX = "VERTEX"
EDGE = "EDGE"
TRIANGLE = "TRIANGLE"
OCTAHEDRON_GENERIC = "OCTAHEDRON_GENERIC"
OCTAHEDRON_SQUARE = "OCTAHEDRON_SQUARE"
INTERIOR = "INTERIOR"
MID_BETA = "MID_BETA"
BETA_ONE_APEX = "BETA_ONE_APEX"
OUTSIDE = "OUTSIDE"

_FACE_TAGS = {0: VERTEX, 1: EDGE, 2: TRIANGLE, 3: OCTAHEDRON_GENERIC, 4: INTERIOR}
_EPS = 1e-12


def _vec(xs) -> Vector:
    return tuple(Fraction(x) for x in xs)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def roots() -> tuple:
    """The 48 roots: +-e_j, (+-1,+-1,+-1,+-1)/2 and +-e_j +- e_k."""
    out = []
    for j in range(4):
        for s in (1, -1):
            v = [0] * 4
            v[j] = s
            out.append(_vec(v))
    for signs in itertools.product((1, -1), repeat=4):
        out.append(_vec(Fraction(s, 2) for s in signs))
    for j, k in itertools.combinations(range(4), 2):
        for sj, sk in itertools.product((1, -1), repeat=2):
            v = [0] * 4
            v[j], v[k] = sj, sk
            out.append(_vec(v))
    return tuple(out)


def is_long(alpha: Sequence) -> bool:
    return _dot(alpha, alpha) == 2


def reflect(alpha: Sequence, beta: Sequence) -> Vector:
    """s_alpha(beta) = beta - 2 <alpha, beta>/<alpha, alpha> alpha, exactly."""
    alpha, beta = _vec(alpha), _vec(beta)
    norm = _dot(alpha, alpha)
    if norm == 0:
        raise DomainError("cannot reflect in the zero vector")
    c = 2 * _dot(alpha, beta) / norm
    return tuple(b - c * a for a, b in zip(alpha, beta))


@dataclass(frozen=True)
class GroupElement:
    """Orthogonal matrix M stored as the integer matrix 2M (row-major tuple)."""

    doubled: tuple

    @classmethod
    def identity(cls) -> "GroupElement":
        return cls(tuple(2 if i == j else 0 for i in range(4) for j in range(4)))

    @classmethod
    def reflection(cls, alpha: Sequence) -> "GroupElement":
        cols = [reflect(alpha, [1 if i == j else 0 for i in range(4)]) for j in range(4)]
        entries = []
        for i in range(4):
            for j in range(4):
                v = 2 * cols[j][i]
                if v.denominator != 1:
                    raise DomainError(f"reflection in {alpha} is not half-integral")
                entries.append(int(v))
        return cls(tuple(entries))

    @property
    def matrix(self) -> tuple:
        """Rows of Fractions."""
        d = self.doubled
        return tuple(tuple(Fraction(d[4 * i + j], 2) for j in range(4)) for i in range(4))

    def as_float(self) -> np.ndarray:
        return np.array(self.doubled, dtype=float).reshape(4, 4) / 2.0

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        a, b = self.doubled, other.doubled
        out = []
        for i in range(4):
            for j in range(4):
                s = sum(a[4 * i + k] * b[4 * k + j] for k in range(4))
                out.append(s // 2)
        return GroupElement(tuple(out))

    def apply(self, v: Sequence) -> Vector:
        m = self.matrix
        v = _vec(v)
        return tuple(sum(m[i][j] * v[j] for j in range(4)) for i in range(4))

    def is_orthogonal(self) -> bool:
        m = self.matrix
        return all(sum(m[i][k] * m[j][k] for k in range(4)) == (1 if i == j else 0)
                   for i in range(4) for j in range(4))

    def is_signed_permutation(self) -> bool:
        return all(x in (0, 2, -2) for x in self.doubled)


SIMPLE_ROOTS = (
    _vec((0, 1, -1, 0)),
    _vec((1, -1, 0, 0)),
    _vec((-1, 0, 0, 0)),
    _vec((Fraction(1, 2),) * 4),
)


@lru_cache(maxsize=None)
def simple_reflections() -> tuple:
    """s_delta for the basis (e2-e3, e1-e2, -e1, (e1+e2+e3+e4)/2), Dynkin order."""
    return tuple(GroupElement.reflection(d) for d in SIMPLE_ROOTS)


def element_order(g: GroupElement, limit: int = 64) -> int:
    ident = GroupElement.identity()
    h = g
    for n in range(1, limit + 1):
        if h == ident:
            return n
        h = h @ g
    raise DomainError(f"element order exceeds {limit}")


def generate_group(generators: Iterable[GroupElement]) -> tuple:
    """Breadth-first closure; element order is deterministic (BFS order)."""
    gens = list(generators)
    ident = GroupElement.identity()
    seen = {ident: None}
    order = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = s @ g
                if h not in seen:
                    seen[h] = None
                    order.append(h)
                    nxt.append(h)
        frontier = nxt
    return tuple(order)


@lru_cache(maxsize=None)
def weyl_group() -> tuple:
    """All 1152 elements of W(F4)."""
    return generate_group(simple_reflections())


@lru_cache(maxsize=None)
def b4_subgroup() -> tuple:
    """W(B4): generated by reflections in the integral roots +-e_j, +-e_j+-e_k."""
    gens = [GroupElement.reflection(a) for a in roots() if all(x.denominator == 1 for x in a)]
    return generate_group(gens)


@lru_cache(maxsize=None)
def _words() -> dict:
    """Shortest generator word (indices into simple_reflections) for each element."""
    gens = simple_reflections()
    ident = GroupElement.identity()
    words = {ident: ()}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for i, s in enumerate(gens):
                h = s @ g
                if h not in words:
                    words[h] = (i,) + words[g]
                    nxt.append(h)
        frontier = nxt
    return words


def word_of(g: GroupElement) -> tuple:
    """Indices i_1..i_n with g = s_{i_1} ... s_{i_n}."""
    return _words()[g]


def element_from_word(word: Sequence[int]) -> GroupElement:
    gens = simple_reflections()
    g = GroupElement.identity()
    for i in word:
        g = g @ gens[i]
    return g


# ---------------------------------------------------------------------------
# multiplicative action on C^4 / (z ~ -z)


@dataclass(frozen=True)
class F4Point:
    """A 4-tuple of nonzero complex parameters modulo a global sign."""

    z: tuple
    A: complex

    def __post_init__(self):
        z = tuple(complex(x) for x in self.z)
        if len(z) != 4:
            raise DomainError("F4Point needs exactly four coordinates")
        if any(x == 0 for x in z):
            raise DomainError("F4Point coordinates must be nonzero")
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "A", complex(self.A))

    def close_to(self, other: "F4Point", rel: float = 1e-10) -> bool:
        return same_up_to_sign(self.z, other.z, rel)


def same_up_to_sign(a: Sequence[complex], b: Sequence[complex], rel: float = 1e-10) -> bool:
    a, b = np.asarray(a, dtype=complex), np.asarray(b, dtype=complex)
    scale = np.maximum(np.abs(a), np.abs(b))
    return bool(np.all(np.abs(a - b) <= rel * scale) or np.all(np.abs(a + b) <= rel * scale))


def _mult_action_coords(g: GroupElement, z: Sequence[complex], A: complex) -> tuple:
    """Monomial form of exp o T_A^{-1} o g o T_A o log.

    Row i of 2M gives exponents n_ij/2 on z_j and exponent (1 - sum_j M_ij)/2
    on A.  Rows with half-integer entries all have entries +-1/2 and share
    the parity of their A-exponent, so one root P = sqrt(z1 z2 z3 z4) and one
    root sqrt(A) suffice; any other branch changes every coordinate by the
    same sign.
    """
    z = [complex(x) for x in z]
    A = complex(A)
    sqrtA = cmath.sqrt(A)
    d = g.doubled
    half = any(x % 2 for x in d)
    P = cmath.sqrt(z[0] * z[1] * z[2] * z[3]) if half else 1.0
    out = []
    for i in range(4):
        row = d[4 * i:4 * i + 4]
        val = 1.0 + 0j
        if half:
            # z^{n/2} = P * z^{(n-1)/2} for n = +-1
            val *= P
            for j in range(4):
                e = (row[j] - 1) // 2
                if e:
                    val *= z[j] ** e
        else:
            for j in range(4):
                e = row[j] // 2
                if e:
                    val *= z[j] ** e
        # A-exponent (1 - sum_j M_ij)/2 = (2 - sum(row))/4, an integer power of sqrt(A)
        val *= sqrtA ** ((2 - sum(row)) // 2)
        out.append(val)
    return tuple(out)


def mult_action(g: GroupElement, point: F4Point) -> F4Point:
    """Multiplicative action with scale ``point.A``, realised algebraically."""
    return F4Point(_mult_action_coords(g, point.z, point.A), point.A)


def act_word(word: Sequence[int], point: F4Point) -> F4Point:
    """Apply s_{i_1} ... s_{i_n} (rightmost first)."""
    gens = simple_reflections()
    for i in reversed(list(word)):
        point = mult_action(gens[i], point)
    return point


def orbit(point: F4Point, rel: float = 1e-9) -> list:
    """Distinct orbit points (modulo sign) under W(F4)."""
    out: list = []
    coords = np.empty((0, 4), dtype=complex)
    for g in weyl_group():
        img = mult_action(g, point)
        z = np.asarray(img.z)
        if coords.shape[0]:
            scale = np.maximum(np.abs(coords), np.abs(z))
            same = np.all(np.abs(coords - z) <= rel * scale, axis=1)
            flipped = np.all(np.abs(coords + z) <= rel * scale, axis=1)
            if np.any(same | flipped):
                continue
        coords = np.vstack([coords, z])
        out.append(img)
    return out


# ---------------------------------------------------------------------------
# additive action on limit exponents


@dataclass(frozen=True)
class LimitExponents:
    """Powers of p attached to b (beta) and to t_r (tau)."""

    beta: float
    tau: tuple

    def __post_init__(self):
        tau = tuple(float(x) for x in self.tau)
        if len(tau) != 4:
            raise DomainError("tau must have four entries")
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "beta", float(self.beta))

    @property
    def shift(self) -> float:
        return (1.0 - self.beta) / 2.0

    def centred(self) -> np.ndarray:
        return np.asarray(self.tau) - self.shift

    def in_polytope(self, eps: float = _EPS) -> bool:
        """0 <= beta <= 1, 0 <= tau_r + tau_s <= 2 - 2 beta, tau_r - tau_s <= 1 - beta."""
        b, t = self.beta, self.tau
        if not (-eps <= b <= 1 + eps):
            return False
        for r, s in itertools.permutations(range(4), 2):
            if not (-eps <= t[r] + t[s] <= 2 - 2 * b + eps):
                return False
            if t[r] - t[s] > 1 - b + eps:
                return False
        return True


def additive_action(g: GroupElement, ex: LimitExponents) -> LimitExponents:
    """tau -> shift + M (tau - shift), shift = (1 - beta)/2 in each coordinate."""
    u = g.as_float() @ ex.centred()
    return LimitExponents(ex.beta, tuple(u + ex.shift))


def canonicalize(ex: LimitExponents) -> tuple:
    """Orbit representative inside the cube [0, 1 - beta]^4 with tau sorted descending.

    Returns (group element, image).  Searches the whole (finite) group and
    keeps the image of smallest sup-norm about the cube centre; ties are
    broken by the sorted tau tuple so the choice is deterministic.
    """
    best = None
    for g in weyl_group():
        img = additive_action(g, ex)
        u = img.centred()
        key = (round(float(np.max(np.abs(u))), 12), tuple(-round(x, 12) for x in img.tau))
        if best is None or key < best[0]:
            best = (key, g, img)
    return best[1], best[2]


def _active_facets(u: np.ndarray, c: float, eps: float) -> list:
    normals = []
    for r, s in itertools.combinations(range(4), 2):
        for sign in (1, -1):
            n = np.zeros(4)
            n[r], n[s] = 1, sign
            if abs(abs(u[r] + sign * u[s]) - c) <= eps:
                normals.append(n)
    return normals


def face_dimension(ex: LimitExponents, eps: float = 1e-9) -> int:
    """Dimension of the smallest face of the beta-slice containing tau."""
    c = 1.0 - ex.beta
    normals = _active_facets(ex.centred(), c, eps)
    if not normals:
        return 4
    return 4 - int(np.linalg.matrix_rank(np.array(normals), tol=1e-9))


def classify_regime(ex: LimitExponents, eps: float = 1e-9) -> str:
    """Which piece of the exponent pyramid (beta, tau) lies in."""
    if not ex.in_polytope(eps):
        return OUTSIDE
    if abs(ex.beta - 1) <= eps:
        return BETA_ONE_APEX
    if ex.beta > eps:
        return MID_BETA
    dim = face_dimension(ex, eps)
    tag = _FACE_TAGS[dim]
    if dim == 3:
        u, c = ex.centred(), 1.0 - ex.beta
        for r, s in itertools.combinations(range(4), 2):
            for sign in (1, -1):
                if abs(abs(u[r] + sign * u[s]) - c) <= eps and abs(u[r] - sign * u[s]) <= eps:
                    return OCTAHEDRON_SQUARE
    return tag
