"""Eigenvalues of the anharmonic oscillator g x^2 + x^(2N)."""

from ._wspec import (
    Error,
    InvalidArgument,
    NotConvergedError,
    PrecisionLossError,
    eigenvalues,
    morse_levels,
    morse_u_reg,
    mpt_levels,
    mpt_wronskian,
    numerov_eigenvalue,
    pt_levels,
    pt_wronskian,
    quantization_function,
    table,
)

__all__ = [
    "Error",
    "InvalidArgument",
    "NotConvergedError",
    "PrecisionLossError",
    "eigenvalues",
    "morse_levels",
    "morse_u_reg",
    "mpt_levels",
    "mpt_wronskian",
    "numerov_eigenvalue",
    "pt_levels",
    "pt_wronskian",
    "quantization_function",
    "table",
]
