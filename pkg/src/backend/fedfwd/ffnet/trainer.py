"""
FF 本地训练: 逐层贪心

每个 mini-batch:
    1. 用真实标签构造正样本，用随机错误标签构造负样本（每个 epoch 重新抽取）
    2. 对第 i 层: 输入是已经更新过的前 i−1 层的归一化输出，
       计算本层梯度并执行一步 SGD，然后用更新后的本层把两批数据继续往下传
"""

import logging
from typing import List

import numpy as np

from src.backend.fedfwd.datasets import LabeledDataset, embed_labels, sample_wrong_labels
from src.backend.fedfwd.exceptions import TrainingError
from src.backend.fedfwd.nn import LocalUpdate
from src.backend.fedfwd.nn.batching import minibatch_indices
from src.backend.fedfwd.numerics import RngStream
from .grads import layer_grad
from .layer import layer_forward, layer_norm
from .model import FFHyper, FFModel

logger = logging.getLogger('ffnet.trainer')


def train_ff_batch(model: FFModel, pixels: np.ndarray, labels: np.ndarray,
                   hyper: FFHyper, rng: RngStream) -> LocalUpdate:
    """
    在一个 mini-batch 上完成一次逐层更新

    Returns:
        LocalUpdate: 新模型与各层损失的平均值
    """
    num_labels = model.num_labels
    h_pos = embed_labels(pixels, labels, num_labels)
    h_neg = embed_labels(pixels, sample_wrong_labels(labels, rng, num_labels), num_labels)

    new_layers = []
    losses: List[float] = []
    last = len(model.layers) - 1
    for i, layer in enumerate(model.layers):
        grad = layer_grad(layer, h_pos, h_neg, model.theta, hyper.loss_kind, hyper.symba_alpha)
        updated = layer.step(grad.d_weights, grad.d_bias, hyper.lr)
        new_layers.append(updated)
        losses.append(grad.mean_loss)
        if i < last:
            h_pos = layer_norm(layer_forward(updated, h_pos), hyper.layernorm_eps)
            h_neg = layer_norm(layer_forward(updated, h_neg), hyper.layernorm_eps)
    return LocalUpdate(model=model.with_blocks(new_layers),
                       mean_loss=float(np.mean(losses)),
                       num_samples=int(pixels.shape[0]))


def local_train_ff(model: FFModel, data: LabeledDataset, hyper: FFHyper, rng: RngStream) -> LocalUpdate:
    """
    客户端本地 FF 训练

    Args:
        model: 全局模型（不会被修改）
        data: 客户端本地数据
        hyper: 训练超参数
        rng: 客户端专属随机数流

    Returns:
        LocalUpdate: (更新后的模型, 所有步的平均损失, 本地样本数)

    Raises:
        TrainingError: 本地数据为空
    """
    if len(data) == 0:
        raise TrainingError("客户端本地数据为空")
    losses: List[float] = []
    for epoch in range(hyper.local_epochs):
        for idx in minibatch_indices(len(data), hyper.batch_size, rng):
            update = train_ff_batch(model, data.pixels[idx], data.labels[idx], hyper, rng)
            model = update.model
            losses.append(update.mean_loss)
        logger.debug(f"FF epoch {epoch + 1}/{hyper.local_epochs} 完成，最近损失 {losses[-1]:.6f}")
    return LocalUpdate(model=model, mean_loss=float(np.mean(losses)), num_samples=len(data))
