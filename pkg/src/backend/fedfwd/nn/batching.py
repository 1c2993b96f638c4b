from typing import Iterator

import numpy as np
from numpy.typing import NDArray

from src.backend.fedfwd.numerics import RngStream


def minibatch_indices(n_samples: int, batch_size: int, rng: RngStream) -> Iterator[NDArray[np.int64]]:
    """打乱后按 batch_size 依次切片，最后一个批次可能不足 batch_size"""
    perm = rng.permutation(n_samples)
    for start in range(0, n_samples, batch_size):
        yield perm[start:start + batch_size]
