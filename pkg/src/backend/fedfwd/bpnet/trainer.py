import logging
from typing import List

import numpy as np

from src.backend.fedfwd.datasets import LabeledDataset
from src.backend.fedfwd.exceptions import TrainingError
from src.backend.fedfwd.nn import LocalUpdate
from src.backend.fedfwd.nn.batching import minibatch_indices
from src.backend.fedfwd.numerics import RngStream
from .backprop import backprop_grads
from .model import BPHyper, BPModel

logger = logging.getLogger('bpnet.trainer')


def sgd_step(model: BPModel, pixels: np.ndarray, labels: np.ndarray, lr: float) -> LocalUpdate:
    """在一个 mini-batch 上执行一步 SGD"""
    grads = backprop_grads(model, pixels, labels)
    blocks = [block.step(g.d_weights, g.d_bias, lr) for block, g in zip(model.blocks(), grads.blocks)]
    return LocalUpdate(model=model.with_blocks(blocks), mean_loss=grads.mean_loss,
                       num_samples=int(pixels.shape[0]))


def local_train_bp(model: BPModel, data: LabeledDataset, hyper: BPHyper, rng: RngStream) -> LocalUpdate:
    """
    客户端本地 BP 训练: E 个 epoch 的打乱 mini-batch SGD

    Args:
        model: 全局模型（不会被修改）
        data: 客户端本地数据
        hyper: 训练超参数
        rng: 客户端专属随机数流

    Raises:
        TrainingError: 本地数据为空
    """
    if len(data) == 0:
        raise TrainingError("客户端本地数据为空")
    losses: List[float] = []
    for epoch in range(hyper.local_epochs):
        for idx in minibatch_indices(len(data), hyper.batch_size, rng):
            update = sgd_step(model, data.pixels[idx], data.labels[idx], hyper.lr)
            model = update.model
            losses.append(update.mean_loss)
        logger.debug(f"BP epoch {epoch + 1}/{hyper.local_epochs} 完成，最近损失 {losses[-1]:.6f}")
    return LocalUpdate(model=model, mean_loss=float(np.mean(losses)), num_samples=len(data))
