"""
测试集准确率
"""

import numpy as np
from numpy.typing import NDArray

from src.backend.fedfwd import bpnet, ffnet
from src.backend.fedfwd.datasets import LabeledDataset
from src.backend.fedfwd.exceptions import EvaluationError, ShapeError
from src.backend.fedfwd.nn import BaseNetwork


def accuracy(predicted: NDArray, labels: NDArray) -> float:
    """
    预测与真实标签相同的比例

    Raises:
        EvaluationError: 样本数为 0 或两者长度不一致
    """
    predicted = np.asarray(predicted)
    labels = np.asarray(labels)
    if labels.size == 0:
        raise EvaluationError("测试集为空，无法计算准确率")
    if predicted.shape != labels.shape:
        raise EvaluationError(f"预测数 {predicted.shape} 与标签数 {labels.shape} 不一致")
    return float(np.count_nonzero(predicted == labels)) / labels.size


def predict_labels(model: BaseNetwork, pixels: NDArray, eps: float = ffnet.LAYERNORM_EPS,
                   skip_first_layer: bool = False) -> NDArray[np.int64]:
    """按模型类型分发到 goodness 预测或 logits 取 argmax"""
    if isinstance(model, ffnet.FFModel):
        return ffnet.predict_batch(model, pixels, eps, skip_first_layer)
    if isinstance(model, bpnet.BPModel):
        return bpnet.predict_batch(model, pixels)
    raise EvaluationError(f"不支持的模型类型: {type(model).__name__}")


def evaluate(model: BaseNetwork, test_set: LabeledDataset, eps: float = ffnet.LAYERNORM_EPS,
             skip_first_layer: bool = False) -> float:
    """
    在测试集上评估模型

    Args:
        model: FF 或 BP 模型
        test_set: 测试集
        eps: FF 层间归一化 eps
        skip_first_layer: FF 预测时是否不计第一层 goodness

    Returns:
        float: [0, 1] 内的准确率

    Raises:
        EvaluationError: 测试集为空
        ShapeError: 输入维度与模型不一致
    """
    if len(test_set) == 0:
        raise EvaluationError("测试集为空，无法计算准确率")
    if test_set.dim != model.input_dim:
        raise ShapeError(f"测试集维度 {test_set.dim} 与模型输入维度 {model.input_dim} 不一致")
    return accuracy(predict_labels(model, test_set.pixels, eps, skip_first_layer), test_set.labels)
