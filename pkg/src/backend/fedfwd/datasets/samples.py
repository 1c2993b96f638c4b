"""
样本类型与标签嵌入

正样本: 图像前 L 个像素被替换为真实标签的 one-hot 向量
负样本: 同一图像的前 L 个像素被替换为某个错误标签的 one-hot 向量
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

import numpy as np
from numpy.typing import NDArray

from src.backend.fedfwd.exceptions import DatasetError, ShapeError
from src.backend.fedfwd.numerics import RngStream

NUM_LABELS = 10
EMBED_MAGNITUDE = 1.0


class Polarity(str, Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True, eq=False)
class LabeledSample:
    """展平后的图像及其真实标签"""
    pixels: NDArray[np.float64]
    label: int


@dataclass(frozen=True, eq=False)
class EmbeddedSample:
    """写入了 one-hot 标签的样本"""
    pixels: NDArray[np.float64]
    polarity: Polarity
    embedded_label: int


@dataclass(frozen=True, eq=False)
class LabeledDataset:
    """
    内存中的数据集，pixels 为 (n, d) 的 float64 矩阵，labels 为 (n,) 的整数数组

    加载后视为不可变，可以被多个客户端 worker 共享
    """
    pixels: NDArray[np.float64]
    labels: NDArray[np.int64]
    num_labels: int = NUM_LABELS
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "pixels", np.asarray(self.pixels, dtype=np.float64))
        object.__setattr__(self, "labels", np.asarray(self.labels, dtype=np.int64))
        if self.pixels.ndim != 2:
            raise ShapeError(f"pixels 必须是二维矩阵，实际为 {self.pixels.shape}")
        if self.labels.shape != (self.pixels.shape[0],):
            raise ShapeError(f"labels 形状 {self.labels.shape} 与样本数 {self.pixels.shape[0]} 不一致")
        if self.labels.size and (self.labels.min() < 0 or self.labels.max() >= self.num_labels):
            raise DatasetError(f"标签超出范围 [0, {self.num_labels})")
        self.pixels.flags.writeable = False
        self.labels.flags.writeable = False

    def __len__(self) -> int:
        return int(self.pixels.shape[0])

    def __getitem__(self, index: int) -> LabeledSample:
        return LabeledSample(pixels=self.pixels[index], label=int(self.labels[index]))

    def __iter__(self) -> Iterator[LabeledSample]:
        for i in range(len(self)):
            yield self[i]

    @property
    def dim(self) -> int:
        return int(self.pixels.shape[1])

    def subset(self, indices: NDArray) -> "LabeledDataset":
        indices = np.asarray(indices, dtype=np.int64)
        return LabeledDataset(
            pixels=self.pixels[indices],
            labels=self.labels[indices],
            num_labels=self.num_labels,
            name=self.name,
        )

    def head(self, n: int) -> "LabeledDataset":
        """取前 n 个样本（桌面规模实验用）"""
        return self.subset(np.arange(min(n, len(self))))


def embed_label(x: LabeledSample, label: int, num_labels: int = NUM_LABELS,
                magnitude: float = EMBED_MAGNITUDE) -> EmbeddedSample:
    """
    将 one-hot 标签写入图像前 num_labels 个像素

    Args:
        x: 原始样本
        label: 要嵌入的标签
        num_labels: 标签数 L
        magnitude: one-hot 的取值

    Returns:
        EmbeddedSample: 嵌入标签等于真实标签时为正样本，否则为负样本
    """
    if not 0 <= label < num_labels:
        raise ValueError(f"标签 {label} 超出范围 [0, {num_labels})")
    pixels = np.array(x.pixels, dtype=np.float64)
    pixels[:num_labels] = 0.0
    pixels[label] = magnitude
    polarity = Polarity.POSITIVE if label == x.label else Polarity.NEGATIVE
    return EmbeddedSample(pixels=pixels, polarity=polarity, embedded_label=int(label))


def make_negative(x: LabeledSample, rng: RngStream, num_labels: int = NUM_LABELS) -> EmbeddedSample:
    """从 L−1 个错误标签中均匀抽取一个并嵌入"""
    wrong = sample_wrong_labels(np.array([x.label]), rng, num_labels)[0]
    return embed_label(x, int(wrong), num_labels)


def embed_labels(pixels: NDArray, labels: NDArray, num_labels: int = NUM_LABELS,
                 magnitude: float = EMBED_MAGNITUDE) -> NDArray[np.float64]:
    """批量版本的 embed_label，返回新矩阵"""
    out = np.array(pixels, dtype=np.float64)
    out[:, :num_labels] = 0.0
    out[np.arange(out.shape[0]), np.asarray(labels, dtype=np.int64)] = magnitude
    return out


def sample_wrong_labels(labels: NDArray, rng: RngStream, num_labels: int = NUM_LABELS) -> NDArray[np.int64]:
    """
    为每个真实标签均匀抽取一个不同的标签

    (y + U{1..L−1}) mod L 恰好覆盖除 y 之外的 L−1 个标签且概率相同
    """
    if num_labels < 2:
        raise ValueError("负样本至少需要 2 个标签")
    labels = np.asarray(labels, dtype=np.int64)
    offsets = rng.integers(1, num_labels, size=labels.shape)
    return (labels + offsets) % num_labels
