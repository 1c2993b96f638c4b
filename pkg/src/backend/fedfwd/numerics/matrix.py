"""
稠密矩阵工具
所有数值计算统一使用行主序的 float64 二维数组（行 = batch，列 = 特征）
"""

from typing import Any

import numpy as np
from numpy.typing import NDArray

from src.backend.fedfwd.exceptions import NumericError, ShapeError

Matrix = NDArray[np.float64]
Vector = NDArray[np.float64]


def as_matrix(data: Any, rows: int = None, cols: int = None) -> Matrix:
    """
    将输入转换为 float64 行主序矩阵

    Args:
        data: 嵌套列表、一维扁平数组或 ndarray
        rows: 行数（data 为扁平数组时必须给出）
        cols: 列数（data 为扁平数组时必须给出）

    Returns:
        Matrix: C 连续的二维 float64 数组

    Raises:
        ShapeError: 数据长度与 rows × cols 不一致
        NumericError: 含有 NaN/Inf
    """
    arr = np.array(data, dtype=np.float64, order='C')
    if rows is not None and cols is not None:
        if arr.size != rows * cols:
            raise ShapeError(f"数据长度 {arr.size} 与形状 {rows}x{cols} 不一致")
        arr = arr.reshape(rows, cols)
    elif arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2:
        raise ShapeError(f"期望二维矩阵，实际维度为 {arr.ndim}")
    return check_finite(arr)


def check_finite(m: NDArray, what: str = "matrix") -> NDArray:
    """校验所有元素均为有限值，原样返回"""
    if not np.all(np.isfinite(m)):
        raise NumericError(f"{what} 中出现非有限数值")
    return m


def identity(n: int) -> Matrix:
    return np.eye(n, dtype=np.float64)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    """
    标准矩阵乘法

    Args:
        a: 形状为 (m, k) 的矩阵
        b: 形状为 (k, n) 的矩阵

    Returns:
        Matrix: 形状为 (m, n) 的乘积

    Raises:
        ShapeError: a.cols != b.rows
        NumericError: 结果溢出为非有限值
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.ndim != 2 or b.ndim != 2:
        raise ShapeError(f"matmul 需要二维矩阵，实际为 {a.ndim}D x {b.ndim}D")
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"维度不匹配: {a.shape} x {b.shape}")
    return check_finite(a @ b, "matmul 结果")


def relative_error(actual: NDArray, expected: NDArray, floor: float = 1e-12) -> float:
    """最大绝对误差除以两者中较大的最大幅值，用于梯度校验"""
    actual = np.asarray(actual, dtype=np.float64)
    expected = np.asarray(expected, dtype=np.float64)
    if actual.shape != expected.shape:
        raise ShapeError(f"形状不一致: {actual.shape} vs {expected.shape}")
    scale = max(float(np.max(np.abs(actual), initial=0.0)),
                float(np.max(np.abs(expected), initial=0.0)),
                floor)
    return float(np.max(np.abs(actual - expected), initial=0.0)) / scale
