"""
FF 目标函数

- ff: 正样本 softplus(θ − g)，负样本 softplus(g − θ)，即 logistic 概率的负对数
- symba: 成对的正负样本，softplus(−α·(g_pos − g_neg)) / α
"""

from enum import Enum
from typing import Union

import numpy as np
from numpy.typing import NDArray

from src.backend.fedfwd.datasets import Polarity

ArrayLike = Union[float, NDArray]


class LossKind(str, Enum):
    FF = "ff"
    SYMBA = "symba"


def softplus(x: ArrayLike) -> ArrayLike:
    return np.logaddexp(0.0, x)


def sigmoid(x: ArrayLike) -> ArrayLike:
    # exp(−softplus(−x)) 在两侧都不会溢出
    return np.exp(-np.logaddexp(0.0, -np.asarray(x, dtype=np.float64)))


def ff_loss(g: ArrayLike, theta: float, polarity: Union[Polarity, bool]) -> ArrayLike:
    """
    单个样本（或逐元素）的 FF 损失

    Args:
        g: goodness
        theta: 阈值 θ
        polarity: Polarity 或 True 表示正样本

    Returns:
        非负损失
    """
    positive = polarity == Polarity.POSITIVE if isinstance(polarity, Polarity) else bool(polarity)
    g = np.asarray(g, dtype=np.float64)
    out = softplus(theta - g) if positive else softplus(g - theta)
    return float(out) if out.ndim == 0 else out


def symba_loss(g_pos: ArrayLike, g_neg: ArrayLike, alpha: float = 1.0) -> ArrayLike:
    """成对 goodness 的 SymBa 损失，随 g_pos − g_neg 单调递减"""
    if alpha <= 0:
        raise ValueError(f"alpha 必须大于 0: {alpha}")
    delta = np.asarray(g_pos, dtype=np.float64) - np.asarray(g_neg, dtype=np.float64)
    out = softplus(-alpha * delta) / alpha
    return float(out) if out.ndim == 0 else out
