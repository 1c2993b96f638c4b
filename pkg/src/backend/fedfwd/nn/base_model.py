"""
网络基类
FF 与 BP 模型都由若干仿射块 (W, b) 组成，联邦聚合和检查点只依赖这一公共接口
"""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import IntEnum
from typing import List, NamedTuple, Sequence

import numpy as np

from src.backend.fedfwd.exceptions import ShapeError
from src.backend.fedfwd.numerics import Matrix, Vector, RngStream, check_finite


class ModelKind(IntEnum):
    """模型类型，数值同时作为检查点文件中的类型标签"""
    FF = 0
    BP = 1


@dataclass(frozen=True, eq=False)
class AffineLayer:
    """仿射块: weights 形状为 (out_dim, in_dim)，bias 形状为 (out_dim,)"""
    weights: Matrix
    bias: Vector

    def __post_init__(self):
        object.__setattr__(self, "weights", np.array(self.weights, dtype=np.float64))
        object.__setattr__(self, "bias", np.array(self.bias, dtype=np.float64))
        if self.weights.ndim != 2 or self.bias.shape != (self.weights.shape[0],):
            raise ShapeError(f"仿射块形状不一致: W{self.weights.shape}, b{self.bias.shape}")
        self.weights.flags.writeable = False
        self.bias.flags.writeable = False

    @property
    def in_dim(self) -> int:
        return int(self.weights.shape[1])

    @property
    def out_dim(self) -> int:
        return int(self.weights.shape[0])

    @property
    def num_parameters(self) -> int:
        return int(self.weights.size + self.bias.size)

    def step(self, d_weights: Matrix, d_bias: Vector, lr: float) -> "AffineLayer":
        """返回执行一步 SGD 之后的新块，原块不变"""
        weights = check_finite(self.weights - lr * d_weights, "更新后的权重")
        bias = check_finite(self.bias - lr * d_bias, "更新后的偏置")
        return AffineLayer(weights=weights, bias=bias)


def init_affine(in_dim: int, out_dim: int, rng: RngStream) -> AffineLayer:
    """uniform(−1/√fan_in, +1/√fan_in) 初始化"""
    bound = 1.0 / math.sqrt(in_dim)
    weights = rng.uniform(-bound, bound, size=(out_dim, in_dim))
    bias = rng.uniform(-bound, bound, size=(out_dim,))
    return AffineLayer(weights=np.ascontiguousarray(weights), bias=bias)


class BaseNetwork(ABC):
    """
    网络抽象基类

    子类是不可变值：训练和聚合总是返回新对象
    """
    kind: ModelKind

    @abstractmethod
    def blocks(self) -> List[AffineLayer]:
        """按前向顺序返回所有仿射块"""
        pass

    @abstractmethod
    def with_blocks(self, blocks: Sequence[AffineLayer]) -> "BaseNetwork":
        """用给定的仿射块构造同结构的新模型"""
        pass

    @property
    def input_dim(self) -> int:
        return self.blocks()[0].in_dim

    @property
    def num_parameters(self) -> int:
        return sum(block.num_parameters for block in self.blocks())

    def shape_signature(self) -> List[tuple]:
        return [(type(self).__name__, b.weights.shape, b.bias.shape) for b in self.blocks()]

    def check_compatible(self, other: "BaseNetwork") -> None:
        """
        检查两个模型结构一致

        Raises:
            ShapeError: 类型或任一块形状不同
        """
        if self.shape_signature() != other.shape_signature():
            raise ShapeError("模型结构不一致，无法聚合")

    def parameters_equal(self, other: "BaseNetwork") -> bool:
        """逐块按位比较参数"""
        if self.shape_signature() != other.shape_signature():
            return False
        return all(
            np.array_equal(a.weights, b.weights) and np.array_equal(a.bias, b.bias)
            for a, b in zip(self.blocks(), other.blocks())
        )


class LocalUpdate(NamedTuple):
    """一次本地训练的结果"""
    model: BaseNetwork
    mean_loss: float
    num_samples: int


def count_parameters(in_dim: int, widths: Sequence[int], num_labels: int, kind: ModelKind) -> int:
    """
    按结构计算参数量（不需要实例化模型）

    FF 没有分类头；BP 额外带一个 hidden → L 的分类头
    """
    dims = [in_dim] + list(widths)
    total = sum(dims[i] * dims[i + 1] + dims[i + 1] for i in range(len(dims) - 1))
    if kind == ModelKind.BP:
        total += dims[-1] * num_labels + num_labels
    return total
