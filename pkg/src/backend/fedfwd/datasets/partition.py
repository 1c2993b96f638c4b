"""
客户端数据划分

- iid: 随机排列后切成 m 个几乎等长的连续块
- non-iid: 按标签排序后切成 m × shards_per_client 个分片，每个客户端随机分到若干分片
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
from numpy.typing import NDArray

from src.backend.fedfwd.exceptions import PartitionError
from src.backend.fedfwd.numerics import RngStream

logger = logging.getLogger('datasets.partition')


@dataclass(frozen=True, eq=False)
class ClientPartition:
    """每个客户端持有的训练集行下标"""
    assignments: Tuple[NDArray[np.int64], ...]

    def __len__(self) -> int:
        return len(self.assignments)

    def __getitem__(self, client_id: int) -> NDArray[np.int64]:
        return self.assignments[client_id]

    @property
    def sizes(self) -> List[int]:
        return [int(a.size) for a in self.assignments]

    def validate(self, n_samples: int) -> None:
        """
        校验互不相交、完整覆盖且没有空客户端

        Raises:
            PartitionError: 任一条件不满足
        """
        if any(a.size == 0 for a in self.assignments):
            raise PartitionError("存在没有数据的客户端")
        merged = np.concatenate(self.assignments) if self.assignments else np.array([], dtype=np.int64)
        if merged.size != n_samples or not np.array_equal(np.sort(merged), np.arange(n_samples)):
            raise PartitionError("划分不满足互不相交且覆盖全部样本")


def _freeze(parts) -> ClientPartition:
    frozen = []
    for part in parts:
        arr = np.sort(np.asarray(part, dtype=np.int64))
        arr.flags.writeable = False
        frozen.append(arr)
    return ClientPartition(assignments=tuple(frozen))


def partition_iid(n_samples: int, m_clients: int, rng: RngStream) -> ClientPartition:
    """
    均匀随机划分

    Args:
        n_samples: 样本总数
        m_clients: 客户端数量
        rng: 随机数流

    Returns:
        ClientPartition: 各客户端样本数相差不超过 1
    """
    if m_clients <= 0:
        raise PartitionError(f"客户端数量必须为正数: {m_clients}")
    if m_clients > n_samples:
        raise PartitionError(f"客户端数量 {m_clients} 超过样本数 {n_samples}")
    perm = rng.permutation(n_samples)
    partition = _freeze(np.array_split(perm, m_clients))
    logger.info(f"iid 划分完成: {m_clients} 个客户端，每个 {min(partition.sizes)}~{max(partition.sizes)} 个样本")
    return partition


def partition_noniid(labels: NDArray, m_clients: int, shards_per_client: int,
                     rng: RngStream) -> ClientPartition:
    """
    按标签排序的分片划分

    Args:
        labels: 训练集标签数组
        m_clients: 客户端数量
        shards_per_client: 每个客户端分到的分片数
        rng: 随机数流

    Returns:
        ClientPartition: 每个客户端只覆盖少数几个标签

    Raises:
        PartitionError: 样本数少于分片总数
    """
    labels = np.asarray(labels)
    n_samples = labels.shape[0]
    if m_clients <= 0 or shards_per_client <= 0:
        raise PartitionError(f"客户端数量与分片数必须为正数: m={m_clients}, shards={shards_per_client}")
    num_shards = m_clients * shards_per_client
    if n_samples < num_shards:
        raise PartitionError(f"样本数 {n_samples} 少于分片总数 {num_shards}")
    order = np.argsort(labels, kind="stable")
    # 不能整除时分片长度相差 1，保证完整覆盖
    shards = np.array_split(order, num_shards)
    dealt = rng.permutation(num_shards)
    parts = [
        np.concatenate([shards[s] for s in dealt[c * shards_per_client:(c + 1) * shards_per_client]])
        for c in range(m_clients)
    ]
    partition = _freeze(parts)
    logger.info(f"non-iid 划分完成: {num_shards} 个分片，每个客户端 {shards_per_client} 个分片")
    return partition
