"""
FedAvg 参数聚合

结果 = base + Σ wᵢ(Mᵢ − base)，base 为按客户端编号升序的第一个模型，
求和使用 Kahan 补偿。k 个相同模型聚合后逐位等于该模型。
"""

import logging
from typing import List, Sequence

import numpy as np
from numpy.typing import NDArray

from src.backend.fedfwd.conf import Weighting
from src.backend.fedfwd.exceptions import AggregationError
from src.backend.fedfwd.nn import AffineLayer, BaseNetwork

logger = logging.getLogger('federation.aggregation')


def aggregation_weights(sample_counts: Sequence[int], weighting: Weighting) -> NDArray[np.float64]:
    """
    各客户端的聚合权重，和为 1

    Raises:
        AggregationError: 列表为空或存在非正样本数
    """
    counts = np.asarray(sample_counts, dtype=np.float64)
    if counts.size == 0:
        raise AggregationError("没有可聚合的客户端")
    if np.any(counts <= 0):
        raise AggregationError(f"客户端样本数必须为正: {list(sample_counts)}")
    if weighting == Weighting.UNIFORM:
        return np.full(counts.size, 1.0 / counts.size)
    return counts / counts.sum()


def _weighted_delta_sum(base: NDArray, params: List[NDArray], weights: NDArray) -> NDArray:
    total = np.zeros_like(base)
    compensation = np.zeros_like(base)
    for w, p in zip(weights, params):
        term = w * (p - base) - compensation
        t = total + term
        compensation = (t - total) - term
        total = t
    return base + total


def aggregate(client_models: Sequence[BaseNetwork], client_sample_counts: Sequence[int],
              weighting: Weighting = Weighting.BY_SAMPLE_COUNT) -> BaseNetwork:
    """
    逐参数加权平均

    Args:
        client_models: 按客户端编号升序排列的本地模型
        client_sample_counts: 与模型一一对应的本地样本数
        weighting: by_sample_count 按 nₖ/Σn 加权，uniform 按 1/k

    Returns:
        BaseNetwork: 与输入同结构的新模型

    Raises:
        AggregationError: 模型与样本数数量不一致、列表为空或样本数非正
        ShapeError: 模型结构不一致
    """
    if len(client_models) != len(client_sample_counts):
        raise AggregationError(
            f"模型数 {len(client_models)} 与样本数列表长度 {len(client_sample_counts)} 不一致")
    weights = aggregation_weights(client_sample_counts, weighting)
    base = client_models[0]
    for model in client_models[1:]:
        base.check_compatible(model)

    per_model_blocks = [model.blocks() for model in client_models]
    blocks = []
    for j, base_block in enumerate(base.blocks()):
        weights_j = _weighted_delta_sum(base_block.weights, [b[j].weights for b in per_model_blocks], weights)
        bias_j = _weighted_delta_sum(base_block.bias, [b[j].bias for b in per_model_blocks], weights)
        blocks.append(AffineLayer(weights=weights_j, bias=bias_j))
    logger.debug(f"聚合 {len(client_models)} 个模型，权重 {np.round(weights, 6).tolist()}")
    return base.with_blocks(blocks)
