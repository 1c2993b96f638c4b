"""
指标 CSV 读写

    round,test_accuracy,mean_train_loss,wall_seconds,sampled_clients
    0,0.098000,0.000000,0.000000,
    1,0.812300,1.234567,0.000000,3;7

浮点数固定 6 位小数，客户端编号以 ; 连接；同一记录总是写出相同字节
"""

import csv
import io
import logging
import os
from pathlib import Path
from typing import Any, Union

from src.backend.fedfwd.exceptions import EvaluationError, MetricsIOError
from src.backend.fedfwd.federation import MetricsLog, RoundMetrics
from src.backend.tools.json_tools import write_json

logger = logging.getLogger('expcli.metrics')

CSV_HEADER = ["round", "test_accuracy", "mean_train_loss", "wall_seconds", "sampled_clients"]


def format_metrics(log: MetricsLog) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for m in log:
        writer.writerow([
            m.round,
            f"{m.test_accuracy:.6f}",
            f"{m.mean_train_loss:.6f}",
            f"{m.wall_seconds:.6f}",
            ";".join(str(c) for c in m.sampled_clients),
        ])
    return buffer.getvalue()


def write_metrics(log: MetricsLog, path: Union[str, os.PathLike]) -> Path:
    """
    将指标记录写成 CSV

    Raises:
        MetricsIOError: 文件无法写入
    """
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(format_metrics(log))
    except OSError as e:
        raise MetricsIOError(f"写入指标文件失败: {e}", path) from e
    logger.info(f"已写入指标文件: {path} ({len(log)} 行)")
    return path


def read_metrics(path: Union[str, os.PathLike]) -> MetricsLog:
    """
    读回 write_metrics 写出的 CSV

    Raises:
        MetricsIOError: 文件无法读取、表头不符或某行无法解析
    """
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8", newline="") as f:
            rows = list(csv.reader(f))
    except OSError as e:
        raise MetricsIOError(f"读取指标文件失败: {e}", path) from e
    if not rows or rows[0] != CSV_HEADER:
        raise MetricsIOError("指标文件表头不符", path)

    log = MetricsLog()
    for line_no, row in enumerate(rows[1:], start=2):
        try:
            round_index, acc, loss, seconds, clients = row
            log = log.append(RoundMetrics(
                round=int(round_index),
                test_accuracy=float(acc),
                mean_train_loss=float(loss),
                wall_seconds=float(seconds),
                sampled_clients=tuple(int(c) for c in clients.split(";") if c),
            ))
        except (ValueError, EvaluationError) as e:
            raise MetricsIOError(f"第 {line_no} 行无法解析: {e}", path) from e
    return log


def write_report(obj: Any, path: Union[str, os.PathLike]) -> Path:
    """
    写出 JSON 报告（运行摘要、主机信息）

    Raises:
        MetricsIOError: 文件无法写入
    """
    try:
        path = write_json(obj, path)
    except OSError as e:
        raise MetricsIOError(f"写入报告失败: {e}", Path(path)) from e
    logger.info(f"已写入报告: {path}")
    return path
