"""
每轮耗时测量

对每个 batch size，FF 与 BP 使用相同的数据、划分和隐藏层结构，
先跑一轮预热，再计时若干轮取中位数。只计训练与聚合，不计评估。
客户端串行执行（workers=1）。
"""

import logging
import os
import platform
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import numpy as np
import psutil

from src.backend.fedfwd.conf import ExperimentConfig, TrainerKind
from src.backend.fedfwd.exceptions import ConfigError, MetricsIOError
from src.backend.fedfwd.federation import ExperimentData, TrainerFactory, prepare_data, train_round
from src.backend.fedfwd.numerics import STREAM_INIT, RngStream

logger = logging.getLogger('expcli.timing')

MIN_TIMED_ROUNDS = 3
TIMING_HEADER = "batch_size,ff_seconds,bp_seconds,ratio"


@dataclass(frozen=True)
class TimingRow:
    batch_size: int
    ff_seconds: float
    bp_seconds: float

    @property
    def ratio(self) -> float:
        """FF / BP 耗时比"""
        return self.ff_seconds / self.bp_seconds if self.bp_seconds > 0 else float("inf")


def host_info() -> Dict[str, Any]:
    """记录测量环境，耗时的绝对值只在同一台机器上可比"""
    return {
        "platform": platform.platform(),
        "python": platform.python_version(),
        "cpu_count_logical": psutil.cpu_count(logical=True),
        "cpu_count_physical": psutil.cpu_count(logical=False),
        "memory_total_gb": round(psutil.virtual_memory().total / 1024 ** 3, 2),
    }


def median_round_seconds(config: ExperimentConfig, data: ExperimentData,
                         timed_rounds: int = MIN_TIMED_ROUNDS) -> float:
    """
    预热一轮后连续计时 timed_rounds 轮，返回中位数秒数

    Args:
        config: 实验配置（已指定 trainer 与 batch_size）
        data: 共享的数据与划分
        timed_rounds: 计时轮数，至少 3
    """
    if timed_rounds < MIN_TIMED_ROUNDS:
        raise ConfigError(f"计时轮数至少为 {MIN_TIMED_ROUNDS}: {timed_rounds}")
    trainer = TrainerFactory.create(config)
    model = trainer.build_model(data.train.dim, RngStream(config.seed, (STREAM_INIT,)))
    samples = []
    for r in range(1, timed_rounds + 2):
        trained = train_round(model, r, config, data, data.partition, trainer)
        model = trained.global_model
        if r > 1:
            samples.append(trained.seconds)
    return float(np.median(samples))


def time_rounds(config: ExperimentConfig, batch_sizes: Sequence[int],
                data: Optional[ExperimentData] = None,
                timed_rounds: int = MIN_TIMED_ROUNDS) -> List[TimingRow]:
    """
    对比 FF 与 BP 每个全局轮次的耗时

    Args:
        config: 基础配置，trainer 字段会被分别替换为 ff 与 bp
        batch_sizes: 要测量的本地 batch size 列表
        data: 预先准备的数据，为空时按配置加载
        timed_rounds: 每个测量点计时的轮数

    Returns:
        List[TimingRow]: 与 batch_sizes 顺序一致的测量结果
    """
    if not batch_sizes:
        raise ConfigError("batch size 列表为空")
    data = data or prepare_data(config)
    rows = []
    for batch_size in batch_sizes:
        seconds = {}
        for kind in (TrainerKind.FF, TrainerKind.BP):
            run_config = config.model_copy(update={"trainer": kind, "batch_size": int(batch_size), "workers": 1})
            seconds[kind] = median_round_seconds(run_config, data, timed_rounds)
        row = TimingRow(batch_size=int(batch_size), ff_seconds=seconds[TrainerKind.FF],
                        bp_seconds=seconds[TrainerKind.BP])
        logger.info(f"batch {row.batch_size}: FF {row.ff_seconds:.4f}s, BP {row.bp_seconds:.4f}s, 比值 {row.ratio:.2f}")
        rows.append(row)
    return rows


def format_timing(rows: Sequence[TimingRow]) -> str:
    lines = [TIMING_HEADER]
    lines += [f"{r.batch_size},{r.ff_seconds:.6f},{r.bp_seconds:.6f},{r.ratio:.6f}" for r in rows]
    return "\n".join(lines) + "\n"


def write_timing(rows: Sequence[TimingRow], path: Union[str, os.PathLike]) -> Path:
    """
    写出耗时表 CSV

    Raises:
        MetricsIOError: 文件无法写入
    """
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(format_timing(rows), encoding="utf-8")
    except OSError as e:
        raise MetricsIOError(f"写入耗时文件失败: {e}", path) from e
    logger.info(f"已写入耗时文件: {path}")
    return path
