"""Exact and compensated evaluation of arithmetic-function identities."""

from ._arithid import (
    ApproxInteger,
    ArithError,
    DegenerateDomain,
    DomainError,
    InexactDivision,
    OverflowError,
    ResidualGuard,
    UnknownIdentity,
    UnknownTarget,
    bench,
    divisors,
    factorize,
    gcd,
    gcd_via_floor,
    jordan,
    lemma,
    list_identities,
    menon_sum,
    mertens,
    mobius_sum,
    mu,
    phi,
    phi_formula,
    pillai,
    pillai_formula,
    tau,
    tau_formula,
    verify,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
