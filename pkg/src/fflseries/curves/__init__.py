"""Elliptic curves over F_q(t): models, reduction types, Frobenius traces."""

from .batch import TraceBatch, batch_reduction_data, local_reduction_data, naive_reduction_data, trace_batch
from .model import EllipticSurfaceModel, infinite_place_model, minimal_model_at, validate
from .reduction import ReductionData, ReductionType, count_points_over, point_count, reduction_at, reduction_type

__all__ = [
    "EllipticSurfaceModel",
    "ReductionData",
    "ReductionType",
    "TraceBatch",
    "batch_reduction_data",
    "count_points_over",
    "infinite_place_model",
    "local_reduction_data",
    "minimal_model_at",
    "naive_reduction_data",
    "point_count",
    "reduction_at",
    "reduction_type",
    "trace_batch",
    "validate",
]
