"""
单层 FF 目标的解析梯度

只对当前层的 W、b 求导；输入被视为常量，因此梯度不会跨层传播。
"""

from typing import NamedTuple

import numpy as np

from src.backend.fedfwd.exceptions import ShapeError
from src.backend.fedfwd.numerics import Matrix, Vector
from .layer import FFLayer, goodness, pre_activation
from .losses import LossKind, sigmoid, softplus


class LayerGrad(NamedTuple):
    d_weights: Matrix
    d_bias: Vector
    mean_loss: float


def _batch_terms(layer: FFLayer, x: Matrix):
    z = pre_activation(layer, x)
    y = np.maximum(z, 0.0)
    return y, goodness(y)


def _param_grads(x: Matrix, y: Matrix, dl_dg: Vector):
    # dg/dz = 2y（y 在 z <= 0 处恰好为 0，即 ReLU 门控）
    dz = (2.0 * dl_dg)[:, None] * y
    return dz.T @ x, dz.sum(axis=0)


def layer_grad(layer: FFLayer, x_pos: Matrix, x_neg: Matrix, theta: float,
               loss_kind: LossKind = LossKind.FF, alpha: float = 1.0) -> LayerGrad:
    """
    计算当前层在一个 mini-batch 上平均损失的梯度

    Args:
        layer: 当前层
        x_pos: 正样本在本层的输入（已归一化）
        x_neg: 负样本在本层的输入；SymBa 要求与 x_pos 逐行配对
        theta: goodness 阈值
        loss_kind: ff 或 symba
        alpha: SymBa 的缩放系数

    Returns:
        LayerGrad: (dW, db, 平均损失)

    Raises:
        ShapeError: 输入维度不匹配或 SymBa 批次无法配对
    """
    x_pos = np.asarray(x_pos, dtype=np.float64)
    x_neg = np.asarray(x_neg, dtype=np.float64)
    if x_pos.shape[0] == 0 or x_neg.shape[0] == 0:
        raise ShapeError("正负样本批次都不能为空")
    y_pos, g_pos = _batch_terms(layer, x_pos)
    y_neg, g_neg = _batch_terms(layer, x_neg)

    if LossKind(loss_kind) == LossKind.SYMBA:
        if x_pos.shape[0] != x_neg.shape[0]:
            raise ShapeError(f"SymBa 需要成对批次: {x_pos.shape[0]} vs {x_neg.shape[0]}")
        n = x_pos.shape[0]
        delta = g_pos - g_neg
        mean_loss = float(np.mean(softplus(-alpha * delta)) / alpha)
        dl_ddelta = -sigmoid(-alpha * delta) / n
        dl_dg_pos, dl_dg_neg = dl_ddelta, -dl_ddelta
    else:
        mean_loss = float(np.mean(softplus(theta - g_pos)) + np.mean(softplus(g_neg - theta)))
        dl_dg_pos = -sigmoid(theta - g_pos) / x_pos.shape[0]
        dl_dg_neg = sigmoid(g_neg - theta) / x_neg.shape[0]

    dw_pos, db_pos = _param_grads(x_pos, y_pos, dl_dg_pos)
    dw_neg, db_neg = _param_grads(x_neg, y_neg, dl_dg_neg)
    return LayerGrad(d_weights=dw_pos + dw_neg, d_bias=db_pos + db_neg, mean_loss=mean_loss)


def layer_loss(layer: FFLayer, x_pos: Matrix, x_neg: Matrix, theta: float,
               loss_kind: LossKind = LossKind.FF, alpha: float = 1.0) -> float:
    """只计算平均损失（梯度校验中的目标函数）"""
    _, g_pos = _batch_terms(layer, x_pos)
    _, g_neg = _batch_terms(layer, x_neg)
    if LossKind(loss_kind) == LossKind.SYMBA:
        return float(np.mean(softplus(-alpha * (g_pos - g_neg))) / alpha)
    return float(np.mean(softplus(theta - g_pos)) + np.mean(softplus(g_neg - theta)))
