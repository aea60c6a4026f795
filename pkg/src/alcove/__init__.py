"""Fusion rules, quantum dimensions and etale-algebra bounds for rank <= 2 affine categories."""
from .lie import AlgebraId, algebra_data, enumerate_alcove, get_algebra, in_alcove
from .fusion import fusion_coeff, tensor_product
from .catdata import qdim, twist_arg
from .etale import corollary_goal_test, scan_level
from .bounds import case_reports, level_bound, max_param

__version__ = "0.1.0"

__all__ = [
    "AlgebraId", "algebra_data", "enumerate_alcove", "get_algebra", "in_alcove",
    "fusion_coeff", "tensor_product", "qdim", "twist_arg",
    "corollary_goal_test", "scan_level", "case_reports", "level_bound", "max_param",
]
