"""
fedfwd.numerics 模块
稠密线性代数、确定性随机数流以及有限差分梯度校验
"""

from .matrix import Matrix, Vector, as_matrix, check_finite, identity, matmul, relative_error
from .rng import (
    RngStream,
    derive_stream,
    STREAM_INIT,
    STREAM_PARTITION,
    STREAM_SAMPLING,
    STREAM_CLIENT,
)
from .gradcheck import finite_diff_grad

__all__ = [
    'Matrix',
    'Vector',
    'as_matrix',
    'check_finite',
    'identity',
    'matmul',
    'relative_error',
    'RngStream',
    'derive_stream',
    'STREAM_INIT',
    'STREAM_PARTITION',
    'STREAM_SAMPLING',
    'STREAM_CLIENT',
    'finite_diff_grad',
]
