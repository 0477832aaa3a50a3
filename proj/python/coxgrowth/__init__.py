"""Exact growth series of Coxeter groups, their recurrence identities and
Euler characteristic censuses of the associated complexes."""

from ._core import (
    CoxeterMatrix,
    OracleHorizonError,
    ParseError,
    RationalFunction,
    catalog_names,
    chi_coefficient,
    chi_t,
    classify,
    growth_series,
    run_cli,
    sphere_sizes,
    verify_identity,
)

__all__ = [
    "CoxeterMatrix",
    "OracleHorizonError",
    "ParseError",
    "RationalFunction",
    "catalog_names",
    "chi_coefficient",
    "chi_t",
    "classify",
    "growth_series",
    "run_cli",
    "sphere_sizes",
    "verify_identity",
]
