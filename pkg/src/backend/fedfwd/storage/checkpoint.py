"""
模型检查点（小端二进制）

    [type]   [description]
    4s       魔数 b"FFWD"
    u16      版本号，当前为 1
    u8       模型类型 0=FF 1=BP
    u32      标签数 L
    f64      阈值 θ（BP 写 0）
    u32      仿射块数量 K
    K 次:
      u32    out_dim
      u32    in_dim
      f64[]  out_dim × in_dim 权重（行主序）
      f64[]  out_dim 偏置

同一个模型写出的字节完全确定，读回后逐位相同。
"""

import hashlib
import logging
import os
import struct
from pathlib import Path
from typing import Union

import numpy as np

from src.backend.fedfwd.bpnet import BPModel
from src.backend.fedfwd.exceptions import CheckpointError
from src.backend.fedfwd.ffnet import FFModel
from src.backend.fedfwd.nn import AffineLayer, BaseNetwork, ModelKind

logger = logging.getLogger('storage.checkpoint')

MAGIC = b"FFWD"
VERSION = 1
_HEADER = struct.Struct("<4sHBIdI")
_BLOCK = struct.Struct("<II")
_F64 = np.dtype("<f8")


def dump_checkpoint(model: BaseNetwork) -> bytes:
    """将模型序列化为字节串"""
    if isinstance(model, FFModel):
        num_labels, theta = model.num_labels, float(model.theta)
    elif isinstance(model, BPModel):
        num_labels, theta = model.num_labels, 0.0
    else:
        raise CheckpointError(f"不支持的模型类型: {type(model).__name__}")
    blocks = model.blocks()
    parts = [_HEADER.pack(MAGIC, VERSION, int(model.kind), num_labels, theta, len(blocks))]
    for block in blocks:
        parts.append(_BLOCK.pack(block.out_dim, block.in_dim))
        parts.append(block.weights.astype(_F64).tobytes(order="C"))
        parts.append(block.bias.astype(_F64).tobytes())
    return b"".join(parts)


def parse_checkpoint(raw: bytes) -> BaseNetwork:
    """
    从字节串恢复模型

    Raises:
        CheckpointError: 魔数/版本/类型不符、数据被截断或有多余字节
    """
    if len(raw) < _HEADER.size:
        raise CheckpointError("检查点文件头不完整")
    magic, version, kind, num_labels, theta, num_blocks = _HEADER.unpack_from(raw, 0)
    if magic != MAGIC:
        raise CheckpointError(f"检查点魔数错误: {magic!r}")
    if version != VERSION:
        raise CheckpointError(f"不支持的检查点版本: {version}")
    offset = _HEADER.size
    blocks = []
    for _ in range(num_blocks):
        if len(raw) < offset + _BLOCK.size:
            raise CheckpointError("检查点在块头处被截断")
        out_dim, in_dim = _BLOCK.unpack_from(raw, offset)
        offset += _BLOCK.size
        n_bytes = (out_dim * in_dim + out_dim) * _F64.itemsize
        if len(raw) < offset + n_bytes:
            raise CheckpointError("检查点在参数处被截断")
        weights = np.frombuffer(raw, dtype=_F64, count=out_dim * in_dim, offset=offset)
        offset += out_dim * in_dim * _F64.itemsize
        bias = np.frombuffer(raw, dtype=_F64, count=out_dim, offset=offset)
        offset += out_dim * _F64.itemsize
        blocks.append(AffineLayer(weights=weights.reshape(out_dim, in_dim).astype(np.float64),
                                  bias=bias.astype(np.float64)))
    if offset != len(raw):
        raise CheckpointError(f"检查点末尾有 {len(raw) - offset} 个多余字节")
    if not blocks:
        raise CheckpointError("检查点中没有任何仿射块")

    if kind == ModelKind.FF:
        return FFModel(layers=tuple(blocks), theta=theta, num_labels=num_labels)
    if kind == ModelKind.BP:
        model = BPModel(hidden=tuple(blocks[:-1]), head=blocks[-1])
        if model.num_labels != num_labels:
            raise CheckpointError(f"分类头输出维度 {model.num_labels} 与标签数 {num_labels} 不一致")
        return model
    raise CheckpointError(f"未知模型类型标签: {kind}")


def model_digest(model: BaseNetwork) -> str:
    """
    模型参数的 SHA-256 指纹，用于比较两次运行是否逐位一致

    Returns:
        str: 检查点字节串的十六进制摘要
    """
    return hashlib.sha256(dump_checkpoint(model)).hexdigest()


def save_checkpoint(model: BaseNetwork, path: Union[str, os.PathLike]) -> Path:
    """
    写出模型检查点，自动创建父目录

    Raises:
        CheckpointError: 文件无法写入
    """
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(dump_checkpoint(model))
    except OSError as e:
        raise CheckpointError(f"无法写入检查点 {path}: {e}") from e
    logger.info(f"已保存检查点: {path} ({model.num_parameters} 个参数)")
    return path


def load_checkpoint(path: Union[str, os.PathLike]) -> BaseNetwork:
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as e:
        raise CheckpointError(f"无法读取检查点 {path}: {e}") from e
    return parse_checkpoint(raw)
