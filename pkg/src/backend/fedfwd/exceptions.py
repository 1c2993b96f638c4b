"""
fedfwd 异常定义
所有模块抛出的业务异常都继承自 FedFwdError，CLI 层统一捕获并转换为非零退出码
"""


class FedFwdError(Exception):
    """fedfwd 异常基类"""
    def __init__(self, message: str):
        self.message = message
        super().__init__(self.message)


class ShapeError(FedFwdError):
    """矩阵/模型维度不匹配"""


class NumericError(FedFwdError):
    """出现 NaN/Inf 等非有限数值"""


class DatasetError(FedFwdError):
    """数据集读取异常基类

    Args:
        message: 错误信息
        path: 出错的文件路径
    """
    path: str

    def __init__(self, message: str, path: str = ""):
        self.path = str(path)
        if path:
            message = f"{message} ({path})"
        super().__init__(message)


class DatasetFormatError(DatasetError):
    """魔数错误或记录长度不合法"""


class DatasetLengthError(DatasetError):
    """文件被截断"""


class DatasetConsistencyError(DatasetError):
    """图像数量与标签数量不一致"""


class DatasetValueError(DatasetError):
    """标签取值越界"""


class DatasetNotFoundError(DatasetError):
    """数据文件缺失"""


class PartitionError(FedFwdError):
    """客户端划分参数不合法"""


class TrainingError(FedFwdError):
    """本地训练参数不合法（如客户端数据为空）"""


class AggregationError(FedFwdError):
    """联邦聚合输入不合法（空列表、样本数非正）"""


class ConfigError(FedFwdError):
    """配置错误：未知键、JSON 解析失败或取值越界"""


class EvaluationError(FedFwdError):
    """评估失败（如测试集为空）"""


class CheckpointError(FedFwdError):
    """模型检查点文件损坏或格式不符"""


class MetricsIOError(FedFwdError):
    """指标文件读写失败"""
    path: str

    def __init__(self, message: str, path: str):
        self.path = str(path)
        super().__init__(f"{message} ({path})")
