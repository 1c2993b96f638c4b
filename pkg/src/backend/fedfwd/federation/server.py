"""
FedAvg 服务器端轮次逻辑

每一轮:
    1. 用流 [2, r] 抽取客户端
    2. 每个客户端用流 [3, r, c] 在自己的数据上训练全局模型的副本（可并行）
    3. 按客户端编号升序聚合
    4. 在测试集上评估并记录 RoundMetrics
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, NamedTuple, Optional

import numpy as np

from src.backend.fedfwd.conf import ExperimentConfig
from src.backend.fedfwd.datasets import ClientPartition
from src.backend.fedfwd.exceptions import NumericError
from src.backend.fedfwd.nn import BaseNetwork, LocalUpdate
from src.backend.fedfwd.numerics import STREAM_CLIENT, STREAM_INIT, STREAM_SAMPLING, RngStream
from .aggregation import aggregate
from .config import FederationConfig
from .data import ExperimentData
from .metrics import MetricsLog, RoundMetrics
from .sampling import sample_clients
from .trainer_factory import TrainerFactory
from .trainers import LocalTrainer

logger = logging.getLogger('federation.server')


@dataclass(frozen=True, eq=False)
class RoundState:
    """
    服务器状态

    Attributes:
        round_index: 已完成的轮次数，0 表示只有初始模型
        global_model: 当前全局模型
        log: 到目前为止的指标记录
        last_round_seconds: 最近一轮训练与聚合的实测耗时
    """
    round_index: int
    global_model: BaseNetwork
    log: MetricsLog
    last_round_seconds: float = 0.0


class TrainedRound(NamedTuple):
    """一轮训练与聚合的结果（不含评估）"""
    global_model: BaseNetwork
    sampled_clients: List[int]
    updates: List[LocalUpdate]
    seconds: float


def initial_state(config: ExperimentConfig, data: ExperimentData,
                  trainer: Optional[LocalTrainer] = None) -> RoundState:
    """用流 [0] 初始化全局模型，并把它的测试准确率记为第 0 轮"""
    trainer = trainer or TrainerFactory.create(config)
    model = trainer.build_model(data.train.dim, RngStream(config.seed, (STREAM_INIT,)))
    metrics = RoundMetrics(round=0, test_accuracy=trainer.evaluate(model, data.test))
    logger.info(f"初始模型 ({model.num_parameters} 个参数) 测试准确率 {metrics.test_accuracy:.4f}")
    return RoundState(round_index=0, global_model=model, log=MetricsLog().append(metrics))


def train_round(global_model: BaseNetwork, round_index: int, config: ExperimentConfig,
                data: ExperimentData, partition: ClientPartition, trainer: LocalTrainer) -> TrainedRound:
    """
    抽样、本地训练与聚合

    并行与否只影响执行顺序：每个客户端的流由 (seed, round, client) 决定，
    聚合总是按客户端编号升序进行
    """
    fed = FederationConfig.from_experiment(config)
    root = RngStream(fed.seed)
    sampled = sample_clients(fed.m_clients, fed.participation_fraction, root.child(STREAM_SAMPLING, round_index))

    def _train_client(client_id: int) -> LocalUpdate:
        client_data = data.train.subset(partition[client_id])
        update = trainer.train(global_model, client_data, root.child(STREAM_CLIENT, round_index, client_id))
        logger.debug(f"第 {round_index} 轮客户端 {client_id}: {update.num_samples} 个样本，损失 {update.mean_loss:.6f}")
        return update

    start = time.perf_counter()
    workers = min(fed.workers, len(sampled))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            updates = list(executor.map(_train_client, sampled))
    else:
        updates = [_train_client(c) for c in sampled]
    new_model = aggregate([u.model for u in updates], [u.num_samples for u in updates], fed.aggregation_weighting)
    seconds = time.perf_counter() - start
    return TrainedRound(global_model=new_model, sampled_clients=sampled, updates=updates, seconds=seconds)


def run_round(state: RoundState, config: ExperimentConfig, data: ExperimentData,
              partition: Optional[ClientPartition] = None,
              trainer: Optional[LocalTrainer] = None) -> RoundState:
    """
    执行一个全局轮次

    Args:
        state: 当前服务器状态
        config: 实验配置
        data: 训练集与测试集
        partition: 客户端划分，默认使用 data.partition
        trainer: 本地训练策略，默认按 config.trainer 创建

    Returns:
        RoundState: 轮次加一、模型聚合、指标追加后的新状态

    Raises:
        NumericError: 聚合后的模型出现非有限值
    """
    trainer = trainer or TrainerFactory.create(config)
    partition = partition if partition is not None else data.partition
    round_index = state.round_index + 1

    trained = train_round(state.global_model, round_index, config, data, partition, trainer)
    if not all(np.isfinite(b.weights).all() and np.isfinite(b.bias).all() for b in trained.global_model.blocks()):
        raise NumericError(f"第 {round_index} 轮聚合后的模型包含非有限值")

    mean_loss = float(np.mean([u.mean_loss for u in trained.updates]))
    metrics = RoundMetrics(
        round=round_index,
        test_accuracy=trainer.evaluate(trained.global_model, data.test),
        mean_train_loss=mean_loss,
        wall_seconds=trained.seconds if config.record_wall_time else 0.0,
        sampled_clients=tuple(trained.sampled_clients),
    )
    logger.info(
        f"第 {round_index} 轮: 准确率 {metrics.test_accuracy:.4f}，平均损失 {mean_loss:.6f}，"
        f"耗时 {trained.seconds:.3f}s，客户端 {trained.sampled_clients}"
    )
    return RoundState(
        round_index=round_index,
        global_model=trained.global_model,
        log=state.log.append(metrics),
        last_round_seconds=trained.seconds,
    )
