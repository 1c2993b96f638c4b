"""
本地训练策略

服务器端只通过 LocalTrainer 接口与 FF / BP 交互：建模、本地训练、评估
"""

import logging
from abc import ABC, abstractmethod

from src.backend.fedfwd.bpnet import BPHyper, build_bp_model, local_train_bp
from src.backend.fedfwd.conf import ExperimentConfig, TrainerKind
from src.backend.fedfwd.datasets import LabeledDataset
from src.backend.fedfwd.ffnet import DEFAULT_THETA, FFHyper, LossKind, build_ff_model, local_train_ff
from src.backend.fedfwd.nn import BaseNetwork, LocalUpdate
from src.backend.fedfwd.numerics import RngStream
from .evaluation import evaluate

logger = logging.getLogger('federation.trainers')


class LocalTrainer(ABC):
    """本地训练策略基类"""
    kind: TrainerKind

    def __init__(self, config: ExperimentConfig):
        self.config = config

    @abstractmethod
    def build_model(self, input_dim: int, rng: RngStream) -> BaseNetwork:
        """随机初始化全局模型"""
        pass

    @abstractmethod
    def train(self, model: BaseNetwork, data: LabeledDataset, rng: RngStream) -> LocalUpdate:
        """在客户端数据上训练全局模型的副本"""
        pass

    def evaluate(self, model: BaseNetwork, test_set: LabeledDataset) -> float:
        return evaluate(model, test_set)


class FFTrainer(LocalTrainer):
    kind = TrainerKind.FF

    def __init__(self, config: ExperimentConfig):
        super().__init__(config)
        self.hyper = FFHyper(
            lr=config.lr,
            batch_size=config.batch_size,
            local_epochs=config.local_epochs,
            loss_kind=config.loss,
            symba_alpha=config.symba_alpha,
            layernorm_eps=config.layernorm_eps,
        )

    def build_model(self, input_dim: int, rng: RngStream) -> BaseNetwork:
        return build_ff_model(input_dim, self.config.widths, rng, theta=self.config.theta)

    def train(self, model: BaseNetwork, data: LabeledDataset, rng: RngStream) -> LocalUpdate:
        return local_train_ff(model, data, self.hyper, rng)

    def evaluate(self, model: BaseNetwork, test_set: LabeledDataset) -> float:
        return evaluate(model, test_set, eps=self.config.layernorm_eps,
                        skip_first_layer=self.config.goodness_skip_first_layer)


class BPTrainer(LocalTrainer):
    kind = TrainerKind.BP

    def __init__(self, config: ExperimentConfig):
        super().__init__(config)
        self.hyper = BPHyper(lr=config.lr, batch_size=config.batch_size, local_epochs=config.local_epochs)
        ignored = []
        if config.loss != LossKind.FF:
            ignored.append(f"loss={config.loss.value}")
        if config.theta != DEFAULT_THETA:
            ignored.append(f"theta={config.theta}")
        if config.goodness_skip_first_layer:
            ignored.append("goodness_skip_first_layer")
        if ignored:
            logger.warning(f"BP 训练忽略以下 FF 专用配置: {', '.join(ignored)}")

    def build_model(self, input_dim: int, rng: RngStream) -> BaseNetwork:
        return build_bp_model(input_dim, self.config.widths, rng)

    def train(self, model: BaseNetwork, data: LabeledDataset, rng: RngStream) -> LocalUpdate:
        return local_train_bp(model, data, self.hyper, rng)
