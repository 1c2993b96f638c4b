"""
FF 模型与本地训练超参数
"""

from dataclasses import dataclass
from typing import ClassVar, List, Sequence, Tuple

from pydantic import BaseModel, Field

from src.backend.fedfwd.exceptions import ShapeError
from src.backend.fedfwd.nn import BaseNetwork, ModelKind, init_affine
from src.backend.fedfwd.numerics import RngStream
from .layer import FFLayer, LAYERNORM_EPS
from .losses import LossKind

DEFAULT_THETA = 2.0


class FFHyper(BaseModel):
    """FF 本地训练超参数"""
    lr: float = Field(0.003, ge=0)
    batch_size: int = Field(10, ge=1)
    local_epochs: int = Field(3, ge=1)
    loss_kind: LossKind = LossKind.FF
    symba_alpha: float = Field(1.0, gt=0)
    layernorm_eps: float = Field(LAYERNORM_EPS, gt=0)


@dataclass(frozen=True, eq=False)
class FFModel(BaseNetwork):
    """
    FF 模型: 若干 ReLU 层，没有分类头，按 goodness 预测

    Attributes:
        layers: 按前向顺序排列的层
        theta: goodness 阈值 θ
        num_labels: 标签数 L
    """
    layers: Tuple[FFLayer, ...]
    theta: float = DEFAULT_THETA
    num_labels: int = 10
    kind: ClassVar[ModelKind] = ModelKind.FF

    def __post_init__(self):
        object.__setattr__(self, "layers", tuple(self.layers))
        if not self.layers:
            raise ShapeError("FF 模型至少需要一层")
        for prev, nxt in zip(self.layers, self.layers[1:]):
            if prev.out_dim != nxt.in_dim:
                raise ShapeError(f"相邻层维度不匹配: {prev.out_dim} -> {nxt.in_dim}")

    def blocks(self) -> List[FFLayer]:
        return list(self.layers)

    def with_blocks(self, blocks: Sequence[FFLayer]) -> "FFModel":
        return FFModel(layers=tuple(blocks), theta=self.theta, num_labels=self.num_labels)

    @property
    def widths(self) -> List[int]:
        return [layer.out_dim for layer in self.layers]


def build_ff_model(input_dim: int, widths: Sequence[int], rng: RngStream,
                   theta: float = DEFAULT_THETA, num_labels: int = 10) -> FFModel:
    """
    按宽度列表随机初始化 FF 模型

    Args:
        input_dim: 输入维度 d
        widths: 各隐藏层宽度
        rng: 初始化随机数流（与客户端和轮次无关）
        theta: goodness 阈值
        num_labels: 标签数
    """
    dims = [input_dim] + list(widths)
    layers = tuple(init_affine(dims[i], dims[i + 1], rng) for i in range(len(widths)))
    return FFModel(layers=layers, theta=theta, num_labels=num_labels)
