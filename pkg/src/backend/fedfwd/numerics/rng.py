"""
可拆分的确定性随机数流

每个流由 (root_seed, stream_path) 唯一确定，底层使用基于计数器的 Philox 生成器，
通过 SeedSequence 的 spawn_key 派生，因此不同客户端的训练可以按任意顺序、
在任意线程中执行而不影响结果。
"""

from typing import Sequence, Tuple

import numpy as np
from numpy.typing import NDArray

_MASK64 = (1 << 64) - 1
_MASK32 = (1 << 32) - 1

# 流路径中的用途标签
STREAM_INIT = 0
STREAM_PARTITION = 1
STREAM_SAMPLING = 2
STREAM_CLIENT = 3


def _spawn_words(path: Tuple[int, ...]) -> Tuple[int, ...]:
    # 每个分量固定拆成两个 uint32 字，[2**32] 与 [0, 1] 不会得到相同的 spawn_key
    return tuple(w for p in path for w in (p & _MASK32, p >> 32))


class RngStream:
    """
    确定性随机数流

    同一时刻只应被一个任务持有；需要并行时通过 child() 派生新的流。
    """

    def __init__(self, root_seed: int, stream_path: Sequence[int] = ()):
        self.root_seed = int(root_seed) & _MASK64
        self.stream_path: Tuple[int, ...] = tuple(int(p) & _MASK64 for p in stream_path)
        seed_seq = np.random.SeedSequence(entropy=self.root_seed, spawn_key=_spawn_words(self.stream_path))
        self._generator = np.random.Generator(np.random.Philox(seed_seq))

    def __repr__(self) -> str:
        return f"RngStream(root_seed={self.root_seed}, stream_path={list(self.stream_path)})"

    @property
    def generator(self) -> np.random.Generator:
        return self._generator

    def child(self, *path: int) -> "RngStream":
        """在当前路径后追加分量，派生一个独立的子流"""
        return RngStream(self.root_seed, self.stream_path + tuple(path))

    def random(self, size=None):
        return self._generator.random(size)

    def uniform(self, low: float, high: float, size=None):
        return self._generator.uniform(low, high, size)

    def integers(self, low: int, high: int = None, size=None):
        return self._generator.integers(low, high, size=size)

    def permutation(self, n: int) -> NDArray[np.int64]:
        return self._generator.permutation(n)

    def choice(self, a, size=None, replace: bool = True):
        return self._generator.choice(a, size=size, replace=replace)


def derive_stream(root_seed: int, path: Sequence[int] = ()) -> RngStream:
    """
    派生随机数流

    Args:
        root_seed: 实验根种子
        path: 流路径，例如 [用途, 轮次, 客户端]

    Returns:
        RngStream: 相同输入总是得到相同的抽样序列
    """
    return RngStream(root_seed, path)
