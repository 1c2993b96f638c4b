"""
测试用数据构造: 合成 IDX / CIFAR 二进制文件与小型玩具数据集
"""

import gzip
import struct
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from src.backend.fedfwd.conf import ExperimentConfig
from src.backend.fedfwd.datasets import LabeledDataset
from src.backend.fedfwd.federation import ExperimentData, build_partition

__all__ = [
    'write_idx_images',
    'write_idx_labels',
    'write_mnist_dir',
    'write_cifar_batch',
    'toy_dataset',
    'separable_toy',
    'toy_config',
    'toy_experiment_data',
]


def write_idx_images(path: Path, images: np.ndarray, magic: int = 0x00000803, compress: bool = False) -> Path:
    images = np.asarray(images, dtype=np.uint8)
    count, rows, cols = images.shape
    raw = struct.pack(">IIII", magic, count, rows, cols) + images.tobytes()
    opener = gzip.open if compress else open
    with opener(path, "wb") as f:
        f.write(raw)
    return path


def write_idx_labels(path: Path, labels: Sequence[int], magic: int = 0x00000801, compress: bool = False) -> Path:
    labels = np.asarray(labels, dtype=np.uint8)
    raw = struct.pack(">II", magic, labels.size) + labels.tobytes()
    opener = gzip.open if compress else open
    with opener(path, "wb") as f:
        f.write(raw)
    return path


def write_mnist_dir(data_dir: Path, n_train: int = 60, n_test: int = 20, seed: int = 0) -> Path:
    """在 data_dir 下写出四个标准文件名的小型 MNIST 数据"""
    rng = np.random.default_rng(seed)
    data_dir.mkdir(parents=True, exist_ok=True)
    for split, n in (("train", n_train), ("t10k", n_test)):
        labels = np.arange(n) % 10
        images = rng.integers(0, 256, size=(n, 28, 28), dtype=np.uint8)
        write_idx_images(data_dir / f"{split}-images-idx3-ubyte", images)
        write_idx_labels(data_dir / f"{split}-labels-idx1-ubyte", labels)
    return data_dir


def write_cifar_batch(path: Path, labels: Sequence[int], pixel_value: Optional[int] = None, seed: int = 0) -> Path:
    rng = np.random.default_rng(seed)
    records = []
    for label in labels:
        if pixel_value is None:
            pixels = rng.integers(0, 256, size=3072, dtype=np.uint8)
        else:
            pixels = np.full(3072, pixel_value, dtype=np.uint8)
        records.append(bytes([label]) + pixels.tobytes())
    path.write_bytes(b"".join(records))
    return path


def toy_dataset(n: int = 40, dim: int = 20, num_labels: int = 10, seed: int = 0) -> LabeledDataset:
    """随机像素、标签循环覆盖所有类别"""
    rng = np.random.default_rng(seed)
    return LabeledDataset(
        pixels=rng.random((n, dim)),
        labels=np.arange(n) % num_labels,
        num_labels=num_labels,
        name="toy",
    )


def separable_toy(n: int = 40, dim: int = 40, num_labels: int = 10, seed: int = 0) -> LabeledDataset:
    """
    每个类别在标签区之后有一块专属的高亮像素，线性可分

    前 num_labels 个像素留给标签嵌入，保持为 0
    """
    rng = np.random.default_rng(seed)
    labels = np.arange(n) % num_labels
    pixels = 0.05 * rng.random((n, dim))
    pixels[:, :num_labels] = 0.0
    block = (dim - num_labels) // num_labels
    for i, label in enumerate(labels):
        start = num_labels + label * block
        pixels[i, start:start + block] = 1.0
    return LabeledDataset(pixels=pixels, labels=labels, num_labels=num_labels, name="separable")


def toy_config(**overrides) -> ExperimentConfig:
    values = dict(
        depth=1,
        width=8,
        m_clients=4,
        fraction=0.5,
        rounds=2,
        local_epochs=1,
        batch_size=5,
        lr=0.01,
        seed=7,
        progress=False,
        workers=1,
    )
    values.update(overrides)
    return ExperimentConfig(**values)


def toy_experiment_data(config: ExperimentConfig, n_train: int = 40, n_test: int = 20,
                        dim: int = 20) -> ExperimentData:
    train = toy_dataset(n_train, dim, seed=1)
    test = toy_dataset(n_test, dim, seed=2)
    return ExperimentData(train=train, test=test, partition=build_partition(config, train))
