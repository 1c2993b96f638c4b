import dataclasses
import json
import os
from enum import Enum
from pathlib import Path
from typing import Any, Union

import numpy as np


class JSONEncoder_with_dataclasses(json.JSONEncoder):
    """支持 dataclass、numpy 标量/数组、Path 与 Enum 的 JSON 编码器"""

    def default(self, o):
        if dataclasses.is_dataclass(o) and not isinstance(o, type):
            return dataclasses.asdict(o)
        if isinstance(o, np.integer):
            return int(o)
        if isinstance(o, np.floating):
            return float(o)
        if isinstance(o, np.ndarray):
            return o.tolist()
        if isinstance(o, Enum):
            return o.value
        if isinstance(o, Path):
            return str(o)
        return super().default(o)


def dumps_json(obj: Any) -> str:
    """键排序、两格缩进，同一对象总是得到相同文本"""
    return json.dumps(obj, ensure_ascii=False, indent=2, sort_keys=True, cls=JSONEncoder_with_dataclasses)


def write_json(obj: Any, path: Union[str, os.PathLike]) -> Path:
    """
    写入 JSON 文件，自动创建父目录

    Args:
        obj: 要序列化的对象
        path: 输出路径

    Returns:
        Path: 写入的文件路径
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_json(obj) + "\n", encoding="utf-8")
    return path
