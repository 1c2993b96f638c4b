"""
每轮指标与整个实验的指标记录
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Tuple

import numpy as np

from src.backend.fedfwd.exceptions import EvaluationError

STABILITY_WINDOW = 20


@dataclass(frozen=True)
class RoundMetrics:
    """
    一轮的结果

    Attributes:
        round: 轮次编号，0 表示初始模型
        test_accuracy: 测试集准确率
        mean_train_loss: 参与客户端本地训练损失的平均值（第 0 轮为 0）
        wall_seconds: 本轮训练与聚合耗时（未开启 record_wall_time 时为 0）
        sampled_clients: 参与本轮的客户端编号
    """
    round: int
    test_accuracy: float
    mean_train_loss: float = 0.0
    wall_seconds: float = 0.0
    sampled_clients: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "sampled_clients", tuple(int(c) for c in self.sampled_clients))
        if not 0.0 <= self.test_accuracy <= 1.0:
            raise EvaluationError(f"准确率超出 [0, 1]: {self.test_accuracy}")
        if self.wall_seconds < 0:
            raise EvaluationError(f"耗时不能为负: {self.wall_seconds}")


@dataclass(frozen=True)
class MetricsLog:
    """按轮次严格递增的 RoundMetrics 序列"""
    rounds: Tuple[RoundMetrics, ...] = field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.rounds)

    def __iter__(self) -> Iterator[RoundMetrics]:
        return iter(self.rounds)

    def __getitem__(self, index: int) -> RoundMetrics:
        return self.rounds[index]

    def append(self, metrics: RoundMetrics) -> "MetricsLog":
        """
        返回追加一轮之后的新记录

        Raises:
            EvaluationError: 轮次编号没有递增
        """
        if self.rounds and metrics.round <= self.rounds[-1].round:
            raise EvaluationError(f"轮次必须递增: {self.rounds[-1].round} -> {metrics.round}")
        return MetricsLog(rounds=self.rounds + (metrics,))

    @property
    def accuracies(self) -> List[float]:
        return [m.test_accuracy for m in self.rounds]

    @property
    def final_accuracy(self) -> float:
        if not self.rounds:
            raise EvaluationError("指标记录为空")
        return self.rounds[-1].test_accuracy

    @property
    def best_accuracy(self) -> float:
        if not self.rounds:
            raise EvaluationError("指标记录为空")
        return max(self.accuracies)

    def last_k_std(self, k: int = STABILITY_WINDOW) -> float:
        """最后 k 轮（不含第 0 轮）准确率的总体标准差，衡量收敛是否平稳"""
        trained = [m.test_accuracy for m in self.rounds if m.round > 0]
        if not trained:
            return 0.0
        return float(np.std(trained[-k:]))

    def rounds_to_reach(self, target: float) -> Optional[int]:
        """第一次达到目标准确率的轮次，从未达到返回 None"""
        for m in self.rounds:
            if m.test_accuracy >= target:
                return m.round
        return None

    def summary(self, target: float = 0.8, window: int = STABILITY_WINDOW) -> Dict[str, Any]:
        return {
            "rounds": self.rounds[-1].round if self.rounds else 0,
            "final_accuracy": self.final_accuracy,
            "best_accuracy": self.best_accuracy,
            f"last_{window}_std": self.last_k_std(window),
            "target_accuracy": target,
            "rounds_to_target": self.rounds_to_reach(target),
        }
