"""
预设实验

每个预设是一组配置覆盖项，展开成一次或多次运行；
table2 是耗时测量，其余为完整实验
"""

import itertools
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from src.backend.fedfwd.exceptions import ConfigError

TABLE2_BATCHES = (1, 4, 16, 64, 128, 256, 512, 1024, 2048)

DESK_SCALE = {
    "dataset": "mnist",
    "depth": 2,
    "width": 100,
    "m_clients": 10,
    "fraction": 0.5,
    "local_epochs": 1,
    "batch_size": 10,
    "lr": 0.003,
    "rounds": 40,
}


@dataclass(frozen=True)
class Preset:
    name: str
    description: str
    runs: Tuple[Dict[str, Any], ...]
    timing_batches: Optional[Tuple[int, ...]] = None
    base: Dict[str, Any] = field(default_factory=dict)

    @property
    def is_timing(self) -> bool:
        return self.timing_batches is not None


def _grid(**axes) -> Tuple[Dict[str, Any], ...]:
    keys = list(axes)
    return tuple(dict(zip(keys, values)) for values in itertools.product(*(axes[k] for k in keys)))


PRESETS: Dict[str, Preset] = {
    "table1": Preset(
        name="table1",
        description="MNIST，2/3 层 × 500，iid 与 non-iid，FF 与 BP",
        base={"dataset": "mnist", "width": 500},
        runs=_grid(trainer=["ff", "bp"], depth=[2, 3], iid=[True, False]),
    ),
    "table3": Preset(
        name="table3",
        description="CIFAR-10，2/3 层 × 500，iid 与 non-iid，FF 与 BP",
        base={"dataset": "cifar10", "width": 500},
        runs=_grid(trainer=["ff", "bp"], depth=[2, 3], iid=[True, False]),
    ),
    "table2": Preset(
        name="table2",
        description="MNIST 每轮耗时，FF 与 BP 在不同 batch size 下对比",
        base={"dataset": "mnist"},
        runs=({},),
        timing_batches=TABLE2_BATCHES,
    ),
    "symba": Preset(
        name="symba",
        description="non-iid 下 FF 损失与 SymBa 损失对比，MNIST 与 CIFAR-10，深度 2/3/4",
        base={"trainer": "ff", "iid": False, "width": 500},
        runs=_grid(dataset=["mnist", "cifar10"], depth=[2, 3, 4], loss=["ff", "symba"]),
    ),
    "sweep": Preset(
        name="sweep",
        description="CIFAR-10 FF，深度 2/3/4 × 宽度 500/1000，iid 与 non-iid",
        base={"dataset": "cifar10", "trainer": "ff"},
        runs=_grid(depth=[2, 3, 4], width=[500, 1000], iid=[True, False]),
    ),
    "desk": Preset(
        name="desk",
        description="桌面规模验收: iid FF、non-iid FF 与 non-iid SymBa",
        base=DESK_SCALE,
        runs=(
            {"trainer": "ff", "loss": "ff", "iid": True},
            {"trainer": "ff", "loss": "ff", "iid": False},
            {"trainer": "ff", "loss": "symba", "iid": False},
        ),
    ),
}


def get_preset(name: str) -> Preset:
    """
    Raises:
        ConfigError: 预设不存在
    """
    try:
        return PRESETS[name]
    except KeyError:
        raise ConfigError(f"未知预设: {name}，可选: {', '.join(sorted(PRESETS))}") from None


def expand_preset(name: str) -> List[Dict[str, Any]]:
    """展开为每次运行的配置层（预设基础值 + 该次运行的差异项）"""
    preset = get_preset(name)
    return [{**preset.base, **run} for run in preset.runs]
