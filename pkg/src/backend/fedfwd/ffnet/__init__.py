"""
fedfwd.ffnet 模块
Forward-Forward 网络: 单层前向、goodness、FF/SymBa 损失、逐层梯度、本地训练与预测
"""

from .layer import FFLayer, LAYERNORM_EPS, goodness, layer_forward, layer_norm, pre_activation
from .losses import LossKind, ff_loss, symba_loss, sigmoid, softplus
from .grads import LayerGrad, layer_grad, layer_loss
from .model import DEFAULT_THETA, FFHyper, FFModel, build_ff_model
from .trainer import local_train_ff, train_ff_batch
from .predict import label_scores, predict, predict_batch

__all__ = [
    'FFLayer',
    'LAYERNORM_EPS',
    'goodness',
    'layer_forward',
    'layer_norm',
    'pre_activation',
    'LossKind',
    'ff_loss',
    'symba_loss',
    'sigmoid',
    'softplus',
    'LayerGrad',
    'layer_grad',
    'layer_loss',
    'DEFAULT_THETA',
    'FFHyper',
    'FFModel',
    'build_ff_model',
    'local_train_ff',
    'train_ff_batch',
    'label_scores',
    'predict',
    'predict_batch',
]
