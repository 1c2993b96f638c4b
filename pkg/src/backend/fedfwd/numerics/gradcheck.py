"""
有限差分梯度，作为仓库中所有解析梯度的校验基准
"""

import math
from typing import Callable

import numpy as np
from numpy.typing import NDArray

from src.backend.fedfwd.exceptions import NumericError


def finite_diff_grad(f: Callable[[NDArray], float], x: NDArray, h: float = 1e-5) -> NDArray:
    """
    中心差分梯度: (f(x + h·eᵢ) − f(x − h·eᵢ)) / (2h)

    Args:
        f: 标量函数，输入与 x 同形状的数组
        x: 求导点（任意形状，不会被修改）
        h: 步长，必须大于 0

    Returns:
        与 x 同形状的梯度数组

    Raises:
        ValueError: h <= 0
        NumericError: f 在某个探测点取到非有限值
    """
    if h <= 0:
        raise ValueError(f"步长必须大于 0: {h}")
    x = np.array(x, dtype=np.float64)
    grad = np.zeros_like(x)
    shifted = x.copy()
    for idx in np.ndindex(x.shape):
        original = shifted[idx]
        shifted[idx] = original + h
        f_plus = float(f(shifted))
        shifted[idx] = original - h
        f_minus = float(f(shifted))
        shifted[idx] = original
        if not (math.isfinite(f_plus) and math.isfinite(f_minus)):
            raise NumericError(f"f 在下标 {idx} 附近取到非有限值")
        grad[idx] = (f_plus - f_minus) / (2.0 * h)
    return grad
