"""
实验配置解析

优先级: 命令行覆盖 > JSON 配置文件 > 预设 > 默认值
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

from pydantic import ValidationError

from src.backend.fedfwd.conf import ExperimentConfig
from src.backend.fedfwd.exceptions import ConfigError

logger = logging.getLogger('expcli.config')

CONFIG_KEYS = frozenset(ExperimentConfig.model_fields)


def _check_keys(values: Mapping[str, Any], source: str) -> None:
    unknown = sorted(set(values) - CONFIG_KEYS)
    if unknown:
        raise ConfigError(f"{source} 中有未知配置项: {', '.join(unknown)}")


def _format_validation_error(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        field = ".".join(str(loc) for loc in item["loc"]) or "<root>"
        parts.append(f"{field}: {item['msg']} (输入 {item.get('input')!r})")
    return "配置校验失败: " + "; ".join(parts)


def load_config_file(path: Union[str, os.PathLike]) -> Dict[str, Any]:
    """
    读取 JSON 配置文件

    Raises:
        ConfigError: 文件不存在、JSON 无法解析、顶层不是对象或含未知键
    """
    path = Path(path)
    try:
        values = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise ConfigError(f"无法读取配置文件 {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"配置文件 {path} 不是合法的 JSON: {e}") from e
    if not isinstance(values, dict):
        raise ConfigError(f"配置文件 {path} 的顶层必须是对象")
    _check_keys(values, str(path))
    return values


def build_config(*layers: Optional[Mapping[str, Any]]) -> ExperimentConfig:
    """
    按顺序合并若干层配置，后面的层覆盖前面的层

    Raises:
        ConfigError: 未知键或取值越界
    """
    merged: Dict[str, Any] = {}
    for layer in layers:
        if not layer:
            continue
        _check_keys(layer, "配置")
        merged.update({k: v for k, v in layer.items() if v is not None})
    try:
        return ExperimentConfig(**merged)
    except ValidationError as e:
        raise ConfigError(_format_validation_error(e)) from e


def parse_config(config_file: Optional[Union[str, os.PathLike]] = None,
                 overrides: Optional[Mapping[str, Any]] = None,
                 preset: Optional[Mapping[str, Any]] = None) -> ExperimentConfig:
    """
    解析实验配置

    Args:
        config_file: JSON 配置文件路径，可为空
        overrides: 命令行覆盖项
        preset: 预设给出的基础值

    Returns:
        ExperimentConfig: 校验通过、缺省值已填充的配置

    Raises:
        ConfigError: 文件错误、未知键或取值越界
    """
    file_values = load_config_file(config_file) if config_file else None
    config = build_config(preset, file_values, overrides)
    logger.debug(f"配置解析完成: {config.model_dump(mode='json')}")
    return config
