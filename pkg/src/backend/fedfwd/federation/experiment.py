import logging
from typing import Optional

from tqdm import tqdm

from src.backend.fedfwd.conf import ExperimentConfig
from .data import ExperimentData, prepare_data
from .metrics import MetricsLog
from .server import RoundState, initial_state, run_round
from .trainer_factory import TrainerFactory

logger = logging.getLogger('federation.experiment')


def run_federation(config: ExperimentConfig, data: Optional[ExperimentData] = None) -> RoundState:
    """
    从随机初始化开始执行 config.rounds 个全局轮次

    Args:
        config: 实验配置
        data: 预先准备好的数据，为空时按配置加载

    Returns:
        RoundState: 最终状态，包含全局模型和完整指标记录
    """
    data = data or prepare_data(config)
    trainer = TrainerFactory.create(config)
    logger.info(
        f"开始实验: trainer={config.trainer.value} loss={config.loss.value} "
        f"depth={config.depth} width={config.width} iid={config.iid} "
        f"m={config.m_clients} fraction={config.fraction} rounds={config.rounds} seed={config.seed}"
    )
    state = initial_state(config, data, trainer)
    progress = tqdm(range(config.rounds), desc=config.run_name(), unit="round",
                    disable=not config.progress)
    for _ in progress:
        state = run_round(state, config, data, data.partition, trainer)
        progress.set_postfix(acc=f"{state.log.final_accuracy:.4f}")
    logger.info(f"实验结束: 最终准确率 {state.log.final_accuracy:.4f}，最佳 {state.log.best_accuracy:.4f}")
    return state


def run_experiment(config: ExperimentConfig, data: Optional[ExperimentData] = None) -> MetricsLog:
    """执行完整实验并返回指标记录；相同种子两次运行结果逐位一致"""
    return run_federation(config, data).log
