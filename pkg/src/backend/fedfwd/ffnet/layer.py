"""
FF 层的前向计算: 仿射 + ReLU、goodness 与层间归一化
"""

import numpy as np
from numpy.typing import NDArray

from src.backend.fedfwd.exceptions import ShapeError
from src.backend.fedfwd.nn import AffineLayer
from src.backend.fedfwd.numerics import Matrix, check_finite, matmul

# FF 层就是带 ReLU 的仿射块
FFLayer = AffineLayer

LAYERNORM_EPS = 1e-8


def pre_activation(layer: FFLayer, x: Matrix) -> Matrix:
    """x·Wᵀ + b"""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 2 or x.shape[1] != layer.in_dim:
        raise ShapeError(f"输入形状 {x.shape} 与层输入维度 {layer.in_dim} 不匹配")
    return check_finite(matmul(x, layer.weights.T) + layer.bias, "预激活")


def layer_forward(layer: FFLayer, x: Matrix) -> Matrix:
    """
    单层前向: relu(x·Wᵀ + b)

    Args:
        layer: FF 层
        x: 形状为 (batch, in_dim) 的输入

    Returns:
        Matrix: 形状为 (batch, out_dim) 的非负激活
    """
    return np.maximum(pre_activation(layer, x), 0.0)


def goodness(y: NDArray) -> NDArray:
    """每一行的平方和 Σⱼ yⱼ²；一维输入返回标量"""
    y = np.asarray(y, dtype=np.float64)
    return np.sum(y * y, axis=-1)


def layer_norm(y: Matrix, eps: float = LAYERNORM_EPS) -> Matrix:
    """
    每行除以 (欧氏范数 + eps)，只把方向传给下一层

    Args:
        y: 激活矩阵
        eps: 加在范数上的保护项，零行输出仍为零行
    """
    if eps <= 0:
        raise ValueError(f"eps 必须大于 0: {eps}")
    y = np.asarray(y, dtype=np.float64)
    norms = np.linalg.norm(y, axis=-1, keepdims=True)
    return y / (norms + eps)
