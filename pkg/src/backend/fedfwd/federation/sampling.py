from typing import List

from src.backend.fedfwd.numerics import RngStream
from .config import selected_count


def sample_clients(m_clients: int, fraction: float, stream: RngStream) -> List[int]:
    """
    本轮参与训练的客户端，均匀无放回抽样

    Args:
        m_clients: 客户端总数 m
        fraction: 参与比例 (0, 1]
        stream: 本轮的抽样随机数流（路径 [2, round]）

    Returns:
        List[int]: 升序排列的 ⌈fraction·m⌉ 个不同客户端编号
    """
    k = selected_count(m_clients, fraction)
    if k == m_clients:
        return list(range(m_clients))
    chosen = stream.choice(m_clients, size=k, replace=False)
    return sorted(int(c) for c in chosen)
