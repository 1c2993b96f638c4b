"""
基于 goodness 的预测

对每个候选标签 ℓ 嵌入 one-hot 后前向，累加各层（归一化之前）激活的 goodness，
取总分最大的标签；并列时取最小的标签。
"""

import numpy as np
from numpy.typing import NDArray

from src.backend.fedfwd.datasets import LabeledSample, embed_labels
from src.backend.fedfwd.exceptions import ShapeError
from .layer import LAYERNORM_EPS, goodness, layer_forward, layer_norm
from .model import FFModel

PREDICT_CHUNK = 2048


def label_scores(model: FFModel, pixels: NDArray, eps: float = LAYERNORM_EPS,
                 skip_first_layer: bool = False, chunk_size: int = PREDICT_CHUNK) -> NDArray[np.float64]:
    """
    计算每个样本在每个候选标签下的总 goodness

    Args:
        model: FF 模型
        pixels: (n, d) 原始图像
        eps: 层间归一化的 eps
        skip_first_layer: 是否不计第一隐藏层的 goodness
        chunk_size: 分块大小，限制内存占用

    Returns:
        (n, L) 分数矩阵
    """
    pixels = np.atleast_2d(np.asarray(pixels, dtype=np.float64))
    if pixels.shape[1] != model.input_dim:
        raise ShapeError(f"输入维度 {pixels.shape[1]} 与模型输入维度 {model.input_dim} 不一致")
    n = pixels.shape[0]
    scores = np.zeros((n, model.num_labels), dtype=np.float64)
    for start in range(0, n, chunk_size):
        chunk = pixels[start:start + chunk_size]
        for label in range(model.num_labels):
            h = embed_labels(chunk, np.full(chunk.shape[0], label), model.num_labels)
            total = np.zeros(chunk.shape[0], dtype=np.float64)
            for i, layer in enumerate(model.layers):
                activity = layer_forward(layer, h)
                if not (skip_first_layer and i == 0):
                    total += goodness(activity)
                h = layer_norm(activity, eps)
            scores[start:start + chunk.shape[0], label] = total
    return scores


def predict_batch(model: FFModel, pixels: NDArray, eps: float = LAYERNORM_EPS,
                  skip_first_layer: bool = False) -> NDArray[np.int64]:
    # np.argmax 返回第一个最大值，即并列时的最小标签
    return np.argmax(label_scores(model, pixels, eps, skip_first_layer), axis=1)


def predict(model: FFModel, x: LabeledSample, eps: float = LAYERNORM_EPS,
            skip_first_layer: bool = False) -> int:
    """对单个样本预测标签"""
    return int(predict_batch(model, x.pixels[None, :], eps, skip_first_layer)[0])
