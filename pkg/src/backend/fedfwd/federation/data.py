"""
实验数据准备: 加载训练/测试集并划分给客户端
"""

import logging
from dataclasses import dataclass
from typing import Optional

from src.backend.fedfwd.conf import ExperimentConfig
from src.backend.fedfwd.datasets import (
    ClientPartition,
    LabeledDataset,
    load_dataset,
    partition_iid,
    partition_noniid,
)
from src.backend.fedfwd.numerics import STREAM_PARTITION, RngStream

logger = logging.getLogger('federation.data')


@dataclass(frozen=True, eq=False)
class ExperimentData:
    train: LabeledDataset
    test: LabeledDataset
    partition: ClientPartition

    def client_data(self, client_id: int) -> LabeledDataset:
        return self.train.subset(self.partition[client_id])


def build_partition(config: ExperimentConfig, train: LabeledDataset) -> ClientPartition:
    """划分只依赖实验种子，与训练器类型无关，FF 与 BP 对比时两边一致"""
    rng = RngStream(config.seed, (STREAM_PARTITION,))
    if config.iid:
        partition = partition_iid(len(train), config.m_clients, rng)
    else:
        partition = partition_noniid(train.labels, config.m_clients, config.shards_per_client, rng)
    partition.validate(len(train))
    return partition


def prepare_data(config: ExperimentConfig, train: Optional[LabeledDataset] = None,
                 test: Optional[LabeledDataset] = None) -> ExperimentData:
    """
    准备一次实验的数据

    Args:
        config: 实验配置
        train: 已加载的训练集，为空时从 config.data_dir 读取
        test: 已加载的测试集，为空时从 config.data_dir 读取

    Returns:
        ExperimentData: 训练集、测试集与客户端划分

    Raises:
        DatasetError: 数据文件缺失或损坏
        PartitionError: 样本数不足以划分
    """
    if train is None:
        train = load_dataset(config.dataset.value, config.data_dir, "train")
    if test is None:
        test = load_dataset(config.dataset.value, config.data_dir, "test")
    if config.max_train_samples is not None:
        train = train.head(config.max_train_samples)
    if config.max_test_samples is not None:
        test = test.head(config.max_test_samples)
    logger.info(f"数据集 {config.dataset.value}: 训练 {len(train)} 条，测试 {len(test)} 条，维度 {train.dim}")
    return ExperimentData(train=train, test=test, partition=build_partition(config, train))
