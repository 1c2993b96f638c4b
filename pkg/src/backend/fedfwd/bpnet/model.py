"""
BP 基线模型: ReLU 隐藏层 + 线性分类头
"""

from dataclasses import dataclass
from typing import ClassVar, List, Sequence, Tuple

from pydantic import BaseModel, Field

from src.backend.fedfwd.exceptions import ShapeError
from src.backend.fedfwd.nn import AffineLayer, BaseNetwork, ModelKind, init_affine
from src.backend.fedfwd.numerics import RngStream


class BPHyper(BaseModel):
    """BP 本地训练超参数（与 FF 保持一致以便公平比较）"""
    lr: float = Field(0.003, ge=0)
    batch_size: int = Field(10, ge=1)
    local_epochs: int = Field(3, ge=1)


@dataclass(frozen=True, eq=False)
class BPModel(BaseNetwork):
    hidden: Tuple[AffineLayer, ...]
    head: AffineLayer
    kind: ClassVar[ModelKind] = ModelKind.BP

    def __post_init__(self):
        object.__setattr__(self, "hidden", tuple(self.hidden))
        dims = self.blocks()
        for prev, nxt in zip(dims, dims[1:]):
            if prev.out_dim != nxt.in_dim:
                raise ShapeError(f"相邻层维度不匹配: {prev.out_dim} -> {nxt.in_dim}")

    def blocks(self) -> List[AffineLayer]:
        return list(self.hidden) + [self.head]

    def with_blocks(self, blocks: Sequence[AffineLayer]) -> "BPModel":
        blocks = list(blocks)
        return BPModel(hidden=tuple(blocks[:-1]), head=blocks[-1])

    @property
    def num_labels(self) -> int:
        return self.head.out_dim


def build_bp_model(input_dim: int, widths: Sequence[int], rng: RngStream, num_labels: int = 10) -> BPModel:
    """隐藏层宽度与同配置的 FF 模型相同，只多一个 hidden → L 的分类头"""
    dims = [input_dim] + list(widths)
    hidden = tuple(init_affine(dims[i], dims[i + 1], rng) for i in range(len(widths)))
    head = init_affine(dims[-1], num_labels, rng)
    return BPModel(hidden=hidden, head=head)
