"""
fedfwd.bpnet 模块
FedAvg 基线: 手写反向传播的 MLP
"""

from .model import BPHyper, BPModel, build_bp_model
from .backprop import (
    BlockGrad,
    BPGradients,
    backprop_grads,
    bp_loss,
    cross_entropy,
    forward_bp,
    predict_batch,
    softmax,
)
from .trainer import local_train_bp, sgd_step


__all__ = [
    'BPHyper',
    'BPModel',
    'build_bp_model',
    'BlockGrad',
    'BPGradients',
    'backprop_grads',
    'bp_loss',
    'cross_entropy',
    'forward_bp',
    'softmax',
    'local_train_bp',
    'sgd_step',
    'predict_batch',
]
