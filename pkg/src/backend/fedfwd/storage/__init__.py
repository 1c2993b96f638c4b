"""
存储模块
负责模型检查点的持久化与指纹计算
"""

from .checkpoint import (
    dump_checkpoint,
    load_checkpoint,
    model_digest,
    parse_checkpoint,
    save_checkpoint,
)

__all__ = [
    'dump_checkpoint',
    'load_checkpoint',
    'model_digest',
    'parse_checkpoint',
    'save_checkpoint',
]
