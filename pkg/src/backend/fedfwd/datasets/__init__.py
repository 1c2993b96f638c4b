"""
fedfwd.datasets 模块
数据集读取、正负样本构造与客户端划分
"""

from .samples import (
    NUM_LABELS,
    EMBED_MAGNITUDE,
    Polarity,
    LabeledSample,
    EmbeddedSample,
    LabeledDataset,
    embed_label,
    embed_labels,
    make_negative,
    sample_wrong_labels,
)
from .loaders import load_mnist, load_cifar10, load_dataset
from .partition import ClientPartition, partition_iid, partition_noniid

__all__ = [
    'NUM_LABELS',
    'EMBED_MAGNITUDE',
    'Polarity',
    'LabeledSample',
    'EmbeddedSample',
    'LabeledDataset',
    'embed_label',
    'embed_labels',
    'make_negative',
    'sample_wrong_labels',
    'load_mnist',
    'load_cifar10',
    'load_dataset',
    'ClientPartition',
    'partition_iid',
    'partition_noniid',
]
