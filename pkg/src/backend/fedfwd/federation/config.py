"""
FedAvg 运行参数

从 ExperimentConfig 中取出服务器端需要的字段，方便单独测试聚合与轮次逻辑
"""

import math

from pydantic import BaseModel, ConfigDict, Field

from src.backend.fedfwd.conf import ExperimentConfig, TrainerKind, Weighting

# 避免 0.7 × 10 = 7.000000000000001 这类浮点误差把选中数向上多取一个
_CEIL_TOLERANCE = 1e-9


def selected_count(m_clients: int, fraction: float) -> int:
    """每轮参与的客户端数 ⌈fraction·m⌉，限制在 [1, m] 内"""
    k = math.ceil(fraction * m_clients - _CEIL_TOLERANCE)
    return max(1, min(m_clients, k))


class FederationConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    m_clients: int = Field(100, ge=1)
    participation_fraction: float = Field(0.1, gt=0.0, le=1.0)
    global_rounds: int = Field(1500, ge=0)
    local_epochs: int = Field(3, ge=1)
    aggregation_weighting: Weighting = Weighting.BY_SAMPLE_COUNT
    trainer_kind: TrainerKind = TrainerKind.FF
    seed: int = Field(0, ge=0, le=2 ** 64 - 1)
    workers: int = Field(1, ge=1)

    @property
    def clients_per_round(self) -> int:
        return selected_count(self.m_clients, self.participation_fraction)

    @classmethod
    def from_experiment(cls, config: ExperimentConfig) -> "FederationConfig":
        return cls(
            m_clients=config.m_clients,
            participation_fraction=config.fraction,
            global_rounds=config.rounds,
            local_epochs=config.local_epochs,
            aggregation_weighting=config.weighting,
            trainer_kind=config.trainer,
            seed=config.seed,
            workers=config.workers,
        )
