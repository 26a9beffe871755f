"""Exception types.

Every error carries a short machine-readable ``code`` so that the
verification harness can record failures per case instead of crashing.
"""

from __future__ import annotations


class EllF4Error(Exception):
    code = "ERROR"


class NonConvergent(EllF4Error):
    code = "NONCONVERGENT"


class TruncationBudgetExceeded(EllF4Error):
    code = "TRUNCATION_BUDGET"


class PoleError(EllF4Error):
    code = "POLE"


class DomainError(EllF4Error, ValueError):
    code = "DOMAIN"


class DivergentDenominator(EllF4Error):
    code = "DIVERGENT_DENOMINATOR"


class NoSeparatingCircle(EllF4Error):
    code = "NO_SEPARATING_CIRCLE"


class NoConvergence(EllF4Error):
    code = "NO_CONVERGENCE"


class DenominatorZero(EllF4Error):
    code = "DENOMINATOR_ZERO"


class OutsidePolytope(EllF4Error, ValueError):
    code = "OUTSIDE_POLYTOPE"


class UnknownSuite(EllF4Error, KeyError):
    code = "UNKNOWN_SUITE"
