"""
fedfwd.expcli 模块
命令行前端: 配置解析、预设实验、指标 CSV 与耗时测量
"""

from src.backend.fedfwd.conf import ExperimentConfig
from src.backend.fedfwd.federation import MetricsLog, RoundMetrics, evaluate
from .config import build_config, load_config_file, parse_config
from .metrics import CSV_HEADER, format_metrics, read_metrics, write_metrics, write_report
from .params import INPUT_DIMS, parameter_count
from .presets import PRESETS, Preset, expand_preset, get_preset
from .runner import build_summary, execute_run
from .timing import TimingRow, format_timing, host_info, median_round_seconds, time_rounds, write_timing

__all__ = [
    'ExperimentConfig',
    'MetricsLog',
    'RoundMetrics',
    'evaluate',
    'build_config',
    'load_config_file',
    'parse_config',
    'CSV_HEADER',
    'format_metrics',
    'read_metrics',
    'write_metrics',
    'write_report',
    'INPUT_DIMS',
    'parameter_count',
    'PRESETS',
    'Preset',
    'expand_preset',
    'get_preset',
    'build_summary',
    'execute_run',
    'TimingRow',
    'format_timing',
    'host_info',
    'median_round_seconds',
    'time_rounds',
    'write_timing',
]
