"""Random Cech complexes on the circle."""

from ._core import (
    DomainError,
    HomotopyType,
    PointFileError,
    SizeError,
    UnclassifiedError,
    census,
    classify,
    coverage_probability,
    covers_circle,
    estimate_chi,
    euler_char,
    expected_euler_char,
    expected_euler_curve,
    omega,
    read_points,
    spike_center,
    spike_excess_bound,
    spike_lower_bound,
    verify_a1,
    verify_b,
)

__all__ = [
    "DomainError",
    "HomotopyType",
    "PointFileError",
    "SizeError",
    "UnclassifiedError",
    "census",
    "classify",
    "coverage_probability",
    "covers_circle",
    "estimate_chi",
    "euler_char",
    "expected_euler_char",
    "expected_euler_curve",
    "omega",
    "read_points",
    "spike_center",
    "spike_excess_bound",
    "spike_lower_bound",
    "verify_a1",
    "verify_b",
]
