"""Exact matrix factorizations of mirror superpotentials for toric Fano surfaces."""

from ._core import (
    LaurentPoly,
    MatrixFactorization,
    build,
    enumerate_json,
    enumerate_pair_json,
    floer_check,
    from_point,
    koszul,
    polytope_json,
    reference_point,
    reference_value,
    superpotential,
    tensor,
    verify,
)

__all__ = [
    "LaurentPoly",
    "MatrixFactorization",
    "build",
    "enumerate_json",
    "enumerate_pair_json",
    "floer_check",
    "from_point",
    "koszul",
    "polytope_json",
    "reference_point",
    "reference_value",
    "superpotential",
    "tensor",
    "verify",
]
