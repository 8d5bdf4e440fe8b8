"""Error taxonomy shared across the package.

Contract errors flag calls that violate a documented precondition (bad
parameters, inadmissible point pairs); domain errors flag evaluation points
outside the mathematical domain of an operation; pole errors flag evaluation
exactly on a singularity.  Numeric failures (quadrature budget exhaustion)
raise :class:`hbkern.quadrature.QuadratureError` instead, which carries the
achieved error estimate.
"""
from __future__ import annotations

__all__ = ["ContractError", "DomainError", "PoleError"]


class ContractError(ValueError):
    """A documented precondition of the call was violated."""


class DomainError(ValueError):
    """The evaluation point lies outside the operation's domain."""


class PoleError(ArithmeticError):
    """Evaluation requested exactly at a pole or atom of the integrand."""
