"""
实验配置

字段名与 JSON 配置文件中的键完全一致；默认值即标准实验设置
（100 个客户端、10% 参与、E=3、batch 10、lr 0.003、1500 轮、3 层 × 500、θ=2.0）
"""

from enum import Enum
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from src.backend.fedfwd.ffnet import DEFAULT_THETA, LAYERNORM_EPS, LossKind
from . import settings


class DatasetName(str, Enum):
    MNIST = "mnist"
    CIFAR10 = "cifar10"


class TrainerKind(str, Enum):
    FF = "ff"
    BP = "bp"


class Weighting(str, Enum):
    BY_SAMPLE_COUNT = "by_sample_count"
    UNIFORM = "uniform"


class ExperimentConfig(BaseModel):
    """
    一次联邦实验的完整配置

    未知键会被拒绝（extra='forbid'），所有数值字段都带取值范围
    """
    model_config = ConfigDict(extra='forbid', frozen=True)

    dataset: DatasetName = DatasetName.MNIST
    data_dir: Path = Field(default_factory=lambda: settings.DATA_DIR)
    trainer: TrainerKind = TrainerKind.FF
    loss: LossKind = LossKind.FF
    depth: int = Field(3, ge=1, le=16)
    width: int = Field(500, ge=1, le=8192)
    iid: bool = True
    m_clients: int = Field(100, ge=1, le=100000)
    fraction: float = Field(0.1, gt=0.0, le=1.0)
    rounds: int = Field(1500, ge=0, le=1000000)
    local_epochs: int = Field(3, ge=1, le=1000)
    batch_size: int = Field(10, ge=1, le=65536)
    # lr=0 允许，用于验证空操作轮次
    lr: float = Field(0.003, ge=0.0, le=10.0)
    theta: float = Field(DEFAULT_THETA, ge=0.0, le=1e6)
    symba_alpha: float = Field(1.0, gt=0.0, le=1000.0)
    seed: int = Field(0, ge=0, le=2 ** 64 - 1)
    output_csv: Optional[Path] = None

    weighting: Weighting = Weighting.BY_SAMPLE_COUNT
    shards_per_client: int = Field(2, ge=1, le=1000)
    layernorm_eps: float = Field(LAYERNORM_EPS, gt=0.0, le=1.0)
    goodness_skip_first_layer: bool = False
    workers: int = Field(default_factory=lambda: settings.WORKERS, ge=1, le=1024)
    record_wall_time: bool = False
    checkpoint_path: Optional[Path] = None
    summary_json: Optional[Path] = None
    progress: bool = True
    max_train_samples: Optional[int] = Field(None, ge=1)
    max_test_samples: Optional[int] = Field(None, ge=1)

    @property
    def widths(self) -> List[int]:
        return [self.width] * self.depth

    def run_name(self, prefix: str = "run") -> str:
        split = "iid" if self.iid else "noniid"
        return (f"{prefix}_{self.dataset.value}_{self.trainer.value}_{self.loss.value}"
                f"_d{self.depth}_w{self.width}_{split}")
