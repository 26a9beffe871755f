"""Brute-force reference implementations, deliberately naive.

Nothing here imports the package: these are the independent oracles the
tests compare against.
"""

import cmath


def long_product(x, q, n=64):
    out = 1.0 + 0j
    for r in range(n):
        out *= 1 - x * q ** r
    return out


def double_product(x, p, q, n=40):
    out = 1.0 + 0j
    for r in range(n):
        for s in range(n):
            out *= 1 - x * p ** r * q ** s
    return out


def theta_direct(x, p, n=64):
    return long_product(x, p, n) * long_product(p / x, p, n)


def gamma_direct(x, p, q, n=40):
    return double_product(p * q / x, p, q, n) / double_product(x, p, q, n)


def finite_poch(x, q, m):
    out = 1.0 + 0j
    for r in range(m):
        out *= 1 - x * q ** r
    return out


def phi_direct(num, den, q, z, n=200):
    """Partial sum of r+1phi_r with every term built from scratch."""
    total = 0j
    for k in range(n):
        term = z ** k
        for a in num:
            term *= finite_poch(a, q, k)
        for b in den:
            term /= finite_poch(b, q, k)
        term /= finite_poch(q, q, k)
        total += term
    return total


def trapezoid(f, radius=1.0, n=2048):
    """Plain equispaced mean of f on |z| = radius."""
    return sum(f(radius * cmath.exp(2j * cmath.pi * k / n)) for k in range(n)) / n


def rel_err(a, b):
    return abs(complex(a) - complex(b)) / abs(complex(b))
