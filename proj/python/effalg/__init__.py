"""Finite effect algebras, subunital matrices and sequential-product axioms."""

from ._effalg import (
    CapExceeded,
    CarrierTooLarge,
    EffectAlgebra,
    Error,
    InputError,
    InternalError,
    Operation,
    count_s1s2,
    count_subunital,
    enumerate,
    exists_s1s4,
    meet,
    sigma,
    subunital_matrices,
    tau,
    verify_suite,
)

__all__ = [
    "CapExceeded",
    "CarrierTooLarge",
    "EffectAlgebra",
    "Error",
    "InputError",
    "InternalError",
    "Operation",
    "count_s1s2",
    "count_subunital",
    "enumerate",
    "exists_s1s4",
    "meet",
    "sigma",
    "subunital_matrices",
    "tau",
    "verify_suite",
]
