import logging
from typing import Dict, List, Type

from src.backend.fedfwd.conf import ExperimentConfig, TrainerKind
from src.backend.fedfwd.exceptions import ConfigError
from .trainers import BPTrainer, FFTrainer, LocalTrainer

logger = logging.getLogger("trainer_factory")


class TrainerFactory:
    """本地训练策略工厂，按 TrainerKind 创建对应的 LocalTrainer"""

    _registry: Dict[TrainerKind, Type[LocalTrainer]] = {
        TrainerKind.FF: FFTrainer,
        TrainerKind.BP: BPTrainer,
    }

    @classmethod
    def register(cls, kind: TrainerKind, trainer_cls: Type[LocalTrainer]) -> None:
        """
        注册（或替换）某类训练策略

        Args:
            kind: 训练器类型
            trainer_cls: LocalTrainer 子类
        """
        if kind in cls._registry:
            logger.warning(f"已存在类型为 {kind.value} 的训练器，将被 {trainer_cls.__name__} 替换")
        cls._registry[kind] = trainer_cls

    @classmethod
    def available(cls) -> List[TrainerKind]:
        return list(cls._registry)

    @classmethod
    def create(cls, config: ExperimentConfig) -> LocalTrainer:
        """
        创建训练器

        Raises:
            ConfigError: 未注册的训练器类型
        """
        trainer_cls = cls._registry.get(config.trainer)
        if trainer_cls is None:
            raise ConfigError(f"未知的训练器类型: {config.trainer}")
        return trainer_cls(config)
