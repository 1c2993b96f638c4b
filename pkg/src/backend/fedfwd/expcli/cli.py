"""
命令行入口

    fedfwd run --config exp.json --rounds 5
    fedfwd time --batches 1,64,1024 --max_train_samples 6000
    fedfwd preset table1 --output-dir results
    fedfwd params --dataset cifar10 --depth 3

退出码: 0 成功，1 运行失败（stderr 给出原因），2 参数错误
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from src.backend.fedfwd.conf import ExperimentConfig, settings
from src.backend.fedfwd.exceptions import ConfigError, FedFwdError
from src.backend.fedfwd.federation import prepare_data
from .config import parse_config
from .metrics import write_report
from .params import parameter_count
from .presets import PRESETS, get_preset, expand_preset
from .runner import execute_run
from .timing import host_info, time_rounds, write_timing

logger = logging.getLogger('expcli.cli')

DEFAULT_BATCHES = "1,64,1024"


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    """为 ExperimentConfig 的每个字段生成一个覆盖参数，值交给 pydantic 转换"""
    parser.add_argument("--config", type=Path, default=None, help="JSON 配置文件")
    group = parser.add_argument_group("配置覆盖项")
    for name in ExperimentConfig.model_fields:
        flags = [f"--{name}"]
        if "_" in name:
            flags.append(f"--{name.replace('_', '-')}")
        group.add_argument(*flags, dest=f"override_{name}", default=None, metavar="VALUE")


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    prefix = "override_"
    return {k[len(prefix):]: v for k, v in vars(args).items() if k.startswith(prefix) and v is not None}


def _parse_batches(text: str) -> List[int]:
    try:
        batches = [int(b) for b in text.split(",") if b.strip()]
    except ValueError:
        raise ConfigError(f"batch size 列表格式错误: {text}") from None
    if not batches or any(b <= 0 for b in batches):
        raise ConfigError(f"batch size 必须是正整数: {text}")
    return batches


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fedfwd", description="联邦 Forward-Forward 实验工具")
    parser.add_argument("--log-level", default=None, help="日志级别，默认取 FEDFWD_LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="执行一次联邦实验")
    _add_config_flags(run)

    timing = sub.add_parser("time", help="对比 FF 与 BP 每轮耗时")
    timing.add_argument("--batches", default=DEFAULT_BATCHES, help="逗号分隔的 batch size 列表")
    timing.add_argument("--timed-rounds", type=int, default=3, help="每个测量点计时的轮数（至少 3）")
    timing.add_argument("--output", type=Path, default=None, help="耗时 CSV 输出路径")
    _add_config_flags(timing)

    preset = sub.add_parser("preset", help="执行预设实验")
    preset.add_argument("name", choices=sorted(PRESETS))
    preset.add_argument("--output-dir", type=Path, default=Path("results"), help="结果输出目录")
    preset.add_argument("--dry-run", action="store_true", help="只列出展开后的运行，不执行")
    _add_config_flags(preset)

    params = sub.add_parser("params", help="按配置计算参数量")
    _add_config_flags(params)
    return parser


def cmd_run(args: argparse.Namespace) -> int:
    config = parse_config(args.config, _overrides(args))
    state = execute_run(config)
    print(f"{config.run_name()}: 最终准确率 {state.log.final_accuracy:.4f}")
    return 0


def cmd_time(args: argparse.Namespace) -> int:
    config = parse_config(args.config, _overrides(args))
    rows = time_rounds(config, _parse_batches(args.batches), timed_rounds=args.timed_rounds)
    for row in rows:
        print(f"batch={row.batch_size} ff={row.ff_seconds:.6f}s bp={row.bp_seconds:.6f}s ratio={row.ratio:.3f}")
    if args.output is not None:
        write_timing(rows, args.output)
        write_report(host_info(), args.output.with_suffix(".host.json"))
    return 0


def cmd_preset(args: argparse.Namespace) -> int:
    preset = get_preset(args.name)
    overrides = _overrides(args)
    configs = [parse_config(args.config, overrides, preset=layer) for layer in expand_preset(preset.name)]
    if args.dry_run:
        for config in configs:
            print(f"{config.run_name(preset.name)}  参数量 {parameter_count(config)}")
        return 0

    if preset.is_timing:
        config = configs[0]
        rows = time_rounds(config, list(preset.timing_batches))
        stem = f"{preset.name}_{config.dataset.value}_timing"
        write_timing(rows, args.output_dir / f"{stem}.csv")
        write_report(host_info(), args.output_dir / f"{stem}.host.json")
        return 0

    # 同一预设内数据集与划分参数相同的运行共享已加载的数据
    cache = {}
    for config in configs:
        config = config.model_copy(update={
            "output_csv": args.output_dir / f"{config.run_name(preset.name)}.csv",
        })
        key = (config.dataset, config.iid, config.m_clients, config.shards_per_client, config.seed,
               config.max_train_samples, config.max_test_samples, str(config.data_dir))
        if key not in cache:
            cache[key] = prepare_data(config)
        state = execute_run(config, cache[key])
        print(f"{config.run_name(preset.name)}: 最终准确率 {state.log.final_accuracy:.4f}")
    return 0


def cmd_params(args: argparse.Namespace) -> int:
    config = parse_config(args.config, _overrides(args))
    print(f"{config.run_name('params')}: {parameter_count(config)}")
    return 0


COMMANDS = {
    "run": cmd_run,
    "time": cmd_time,
    "preset": cmd_preset,
    "params": cmd_params,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    settings.setup_logging(args.log_level)
    try:
        return COMMANDS[args.command](args)
    except FedFwdError as e:
        logger.debug("命令执行失败", exc_info=True)
        print(f"错误: {e.message}", file=sys.stderr)
        return 1
