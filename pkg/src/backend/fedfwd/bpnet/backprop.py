"""
手写反向传播: softmax 交叉熵对所有层参数的精确梯度
"""

from typing import List, NamedTuple, Tuple

import numpy as np
from numpy.typing import NDArray

from src.backend.fedfwd.exceptions import ShapeError
from src.backend.fedfwd.numerics import Matrix, Vector, check_finite, matmul
from .model import BPModel


class BlockGrad(NamedTuple):
    d_weights: Matrix
    d_bias: Vector


class BPGradients(NamedTuple):
    """blocks 与 BPModel.blocks() 一一对应（最后一个是分类头）"""
    blocks: List[BlockGrad]
    mean_loss: float


def _forward_with_cache(model: BPModel, x: Matrix) -> Tuple[List[Matrix], List[Matrix], Matrix]:
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 2 or x.shape[1] != model.input_dim:
        raise ShapeError(f"输入形状 {x.shape} 与模型输入维度 {model.input_dim} 不匹配")
    inputs, pre = [], []
    h = x
    for layer in model.hidden:
        inputs.append(h)
        z = check_finite(matmul(h, layer.weights.T) + layer.bias, "隐藏层预激活")
        pre.append(z)
        h = np.maximum(z, 0.0)
    inputs.append(h)
    logits = check_finite(matmul(h, model.head.weights.T) + model.head.bias, "logits")
    return inputs, pre, logits


def forward_bp(model: BPModel, x: Matrix) -> Matrix:
    """
    BP 前向（输入为原始图像，不嵌入标签）

    Returns:
        Matrix: (batch, L) logits
    """
    return _forward_with_cache(model, x)[2]


def softmax(logits: Matrix) -> Matrix:
    shifted = logits - logits.max(axis=1, keepdims=True)
    exp = np.exp(shifted)
    return exp / exp.sum(axis=1, keepdims=True)


def cross_entropy(logits: Matrix, labels: NDArray) -> float:
    """平均 softmax 交叉熵"""
    labels = np.asarray(labels, dtype=np.int64)
    log_norm = np.logaddexp.reduce(logits, axis=1)
    return float(np.mean(log_norm - logits[np.arange(logits.shape[0]), labels]))


def bp_loss(model: BPModel, x: Matrix, labels: NDArray) -> float:
    return cross_entropy(forward_bp(model, x), labels)


def backprop_grads(model: BPModel, x: Matrix, labels: NDArray) -> BPGradients:
    """
    计算平均交叉熵对所有层的梯度

    Args:
        model: BP 模型
        x: (batch, d) 输入
        labels: (batch,) 真实标签

    Returns:
        BPGradients: 各块梯度与平均损失
    """
    labels = np.asarray(labels, dtype=np.int64)
    inputs, pre, logits = _forward_with_cache(model, x)
    n = logits.shape[0]
    if labels.shape != (n,) or (labels.size and (labels.min() < 0 or labels.max() >= model.num_labels)):
        raise ShapeError(f"标签形状或取值不合法: {labels.shape}")

    probs = softmax(logits)
    dz = probs.copy()
    dz[np.arange(n), labels] -= 1.0
    dz /= n

    grads: List[BlockGrad] = [BlockGrad(dz.T @ inputs[-1], dz.sum(axis=0))]
    dh = dz @ model.head.weights
    for i in range(len(model.hidden) - 1, -1, -1):
        dz = dh * (pre[i] > 0)
        grads.append(BlockGrad(dz.T @ inputs[i], dz.sum(axis=0)))
        dh = dz @ model.hidden[i].weights
    grads.reverse()
    return BPGradients(blocks=grads, mean_loss=cross_entropy(logits, labels))


def predict_batch(model: BPModel, pixels: NDArray) -> NDArray[np.int64]:
    """logits 取 argmax，并列时取最小标签"""
    return np.argmax(forward_bp(model, np.atleast_2d(pixels)), axis=1)
