from typing import Union

from src.backend.fedfwd.conf import DatasetName, ExperimentConfig, TrainerKind
from src.backend.fedfwd.datasets import NUM_LABELS
from src.backend.fedfwd.nn import BaseNetwork, ModelKind, count_parameters

# 展平后的输入维度
INPUT_DIMS = {
    DatasetName.MNIST: 28 * 28,
    DatasetName.CIFAR10: 32 * 32 * 3,
}


def parameter_count(source: Union[ExperimentConfig, BaseNetwork]) -> int:
    """
    模型参数量；传入配置时按结构计算，不需要加载数据或实例化模型

    Args:
        source: 实验配置或已有模型
    """
    if isinstance(source, BaseNetwork):
        return source.num_parameters
    kind = ModelKind.FF if source.trainer == TrainerKind.FF else ModelKind.BP
    return count_parameters(INPUT_DIMS[source.dataset], source.widths, NUM_LABELS, kind)
