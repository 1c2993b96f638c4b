"""
fedfwd.federation 模块
FedAvg 编排: 客户端抽样、本地训练分发、加权聚合与全局轮次记录
"""

from .config import FederationConfig, selected_count
from .sampling import sample_clients
from .aggregation import aggregate, aggregation_weights
from .evaluation import accuracy, evaluate, predict_labels
from .metrics import STABILITY_WINDOW, MetricsLog, RoundMetrics
from .trainers import BPTrainer, FFTrainer, LocalTrainer
from .trainer_factory import TrainerFactory
from .data import ExperimentData, build_partition, prepare_data
from .server import RoundState, TrainedRound, initial_state, run_round, train_round
from .experiment import run_experiment, run_federation

__all__ = [
    'FederationConfig',
    'selected_count',
    'sample_clients',
    'aggregate',
    'aggregation_weights',
    'accuracy',
    'evaluate',
    'predict_labels',
    'STABILITY_WINDOW',
    'MetricsLog',
    'RoundMetrics',
    'BPTrainer',
    'FFTrainer',
    'LocalTrainer',
    'TrainerFactory',
    'ExperimentData',
    'build_partition',
    'prepare_data',
    'RoundState',
    'TrainedRound',
    'initial_state',
    'run_round',
    'train_round',
    'run_experiment',
    'run_federation',
]
