"""
配置模块
环境变量设置（.env）与实验配置模型
"""

from .experiment import DatasetName, ExperimentConfig, TrainerKind, Weighting

__all__ = [
    'DatasetName',
    'ExperimentConfig',
    'TrainerKind',
    'Weighting',
]
