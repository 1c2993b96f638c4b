"""
MNIST / CIFAR-10 原始二进制文件读取

MNIST IDX 格式（大端）:
    [offset] [type]          [value]          [description]
    0000     32 bit integer  0x00000803(2051) 图像文件魔数
    0004     32 bit integer  60000            图像数量
    0008     32 bit integer  28               行数
    0012     32 bit integer  28               列数
    0016     unsigned byte   ??               像素
    标签文件魔数为 0x00000801(2049)，随后是数量与逐字节标签。

CIFAR-10 binary version: 每条记录 3073 字节，1 字节标签 + 32×32×3 像素（按通道存储）。

数据不会自动下载，需要手动放到数据目录（见 README）。
"""

import gzip
import logging
import os
import struct
from pathlib import Path
from typing import Iterable, List, Union

import numpy as np

from src.backend.fedfwd.exceptions import (
    DatasetConsistencyError,
    DatasetError,
    DatasetFormatError,
    DatasetLengthError,
    DatasetNotFoundError,
    DatasetValueError,
)
from .samples import LabeledDataset, NUM_LABELS

logger = logging.getLogger('datasets.loaders')

MNIST_IMAGES_MAGIC = 0x00000803
MNIST_LABELS_MAGIC = 0x00000801
CIFAR_RECORD_BYTES = 3073
CIFAR_PIXELS = 3072

MNIST_FILES = {
    "train": ("train-images-idx3-ubyte", "train-labels-idx1-ubyte"),
    "test": ("t10k-images-idx3-ubyte", "t10k-labels-idx1-ubyte"),
}
CIFAR_FILES = {
    "train": [f"data_batch_{i}.bin" for i in range(1, 6)],
    "test": ["test_batch.bin"],
}

PathLike = Union[str, os.PathLike]


def _read_bytes(path: PathLike) -> bytes:
    path = Path(path)
    opener = gzip.open if path.suffix == ".gz" else open
    with opener(path, "rb") as f:
        return f.read()


def _read_idx_images(path: PathLike) -> np.ndarray:
    raw = _read_bytes(path)
    if len(raw) < 16:
        raise DatasetLengthError("IDX 图像文件头不完整", path)
    magic, count, rows, cols = struct.unpack(">IIII", raw[:16])
    if magic != MNIST_IMAGES_MAGIC:
        raise DatasetFormatError(f"IDX 图像文件魔数错误: 0x{magic:08x}", path)
    expected = 16 + count * rows * cols
    if len(raw) < expected:
        raise DatasetLengthError(f"IDX 图像文件被截断: 期望 {expected} 字节，实际 {len(raw)} 字节", path)
    pixels = np.frombuffer(raw, dtype=np.uint8, count=count * rows * cols, offset=16)
    return pixels.reshape(count, rows * cols)


def _read_idx_labels(path: PathLike) -> np.ndarray:
    raw = _read_bytes(path)
    if len(raw) < 8:
        raise DatasetLengthError("IDX 标签文件头不完整", path)
    magic, count = struct.unpack(">II", raw[:8])
    if magic != MNIST_LABELS_MAGIC:
        raise DatasetFormatError(f"IDX 标签文件魔数错误: 0x{magic:08x}", path)
    if len(raw) < 8 + count:
        raise DatasetLengthError(f"IDX 标签文件被截断: 期望 {8 + count} 字节，实际 {len(raw)} 字节", path)
    labels = np.frombuffer(raw, dtype=np.uint8, count=count, offset=8)
    if labels.size and labels.max() >= NUM_LABELS:
        raise DatasetValueError(f"标签取值 {int(labels.max())} 超出范围 [0, {NUM_LABELS})", path)
    return labels


def load_mnist(images_path: PathLike, labels_path: PathLike) -> LabeledDataset:
    """
    读取一对 MNIST IDX 文件（支持 .gz）

    Args:
        images_path: 图像文件路径
        labels_path: 标签文件路径

    Returns:
        LabeledDataset: 像素值为 byte / 255.0

    Raises:
        DatasetFormatError: 魔数错误
        DatasetLengthError: 文件被截断
        DatasetConsistencyError: 图像与标签数量不一致
    """
    images = _read_idx_images(images_path)
    labels = _read_idx_labels(labels_path)
    if images.shape[0] != labels.shape[0]:
        raise DatasetConsistencyError(
            f"图像数量 {images.shape[0]} 与标签数量 {labels.shape[0]} 不一致", images_path)
    dataset = LabeledDataset(
        pixels=images.astype(np.float64) / 255.0,
        labels=labels.astype(np.int64),
        name="mnist",
    )
    logger.info(f"已加载 MNIST: {len(dataset)} 个样本，维度 {dataset.dim} ({images_path})")
    return dataset


def load_cifar10(batch_paths: Iterable[PathLike]) -> LabeledDataset:
    """
    读取若干 CIFAR-10 二进制 batch 文件并按顺序拼接

    Args:
        batch_paths: batch 文件路径列表

    Returns:
        LabeledDataset: 像素保持文件中的通道优先顺序，除以 255.0

    Raises:
        DatasetFormatError: 文件大小不是 3073 的整数倍
        DatasetValueError: 标签字节 >= 10
    """
    pixel_parts: List[np.ndarray] = []
    label_parts: List[np.ndarray] = []
    for path in batch_paths:
        raw = _read_bytes(path)
        if len(raw) == 0 or len(raw) % CIFAR_RECORD_BYTES != 0:
            raise DatasetFormatError(
                f"CIFAR-10 文件大小 {len(raw)} 不是 {CIFAR_RECORD_BYTES} 的整数倍", path)
        records = np.frombuffer(raw, dtype=np.uint8).reshape(-1, CIFAR_RECORD_BYTES)
        labels = records[:, 0]
        if labels.max() >= NUM_LABELS:
            raise DatasetValueError(f"标签字节 {int(labels.max())} 超出范围 [0, {NUM_LABELS})", path)
        label_parts.append(labels.astype(np.int64))
        pixel_parts.append(records[:, 1:])
    if not pixel_parts:
        raise DatasetNotFoundError("未提供任何 CIFAR-10 batch 文件")
    dataset = LabeledDataset(
        pixels=np.concatenate(pixel_parts).astype(np.float64) / 255.0,
        labels=np.concatenate(label_parts),
        name="cifar10",
    )
    logger.info(f"已加载 CIFAR-10: {len(dataset)} 个样本，来自 {len(pixel_parts)} 个文件")
    return dataset


# 在数据目录下依次查找的子目录；两个数据集可以共用一个数据目录
SEARCH_DIRS = {
    "mnist": ("", "mnist"),
    "cifar10": ("cifar-10-batches-bin", "cifar10/cifar-10-batches-bin", "cifar10", ""),
}


def _dataset_dir(data_dir: Path, dataset: str, first_file: str) -> Path:
    for sub in SEARCH_DIRS[dataset]:
        base = data_dir / sub if sub else data_dir
        if (base / first_file).exists() or (base / f"{first_file}.gz").exists():
            return base
    return data_dir


def _resolve(data_dir: Path, name: str) -> Path:
    for candidate in (data_dir / name, data_dir / f"{name}.gz"):
        if candidate.exists():
            return candidate
    raise DatasetNotFoundError(
        f"找不到数据文件 {name}，请手动下载并放入数据目录", data_dir)


def load_dataset(dataset: str, data_dir: PathLike, split: str = "train") -> LabeledDataset:
    """
    按数据集名与划分从数据目录加载标准文件名

    Args:
        dataset: mnist 或 cifar10
        data_dir: 数据目录
        split: train 或 test
    """
    data_dir = Path(data_dir)
    if dataset == "mnist":
        images_name, labels_name = MNIST_FILES[split]
        base = _dataset_dir(data_dir, dataset, images_name)
        return load_mnist(_resolve(base, images_name), _resolve(base, labels_name))
    if dataset == "cifar10":
        names = CIFAR_FILES[split]
        base = _dataset_dir(data_dir, dataset, names[0])
        return load_cifar10([_resolve(base, name) for name in names])
    raise DatasetError(f"未知数据集: {dataset}")
