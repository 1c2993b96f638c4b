"""
桌面规模验收，需要真实 MNIST 文件（FEDFWD_DATA_DIR），缺失时跳过
"""

import pytest

from src.backend.fedfwd.conf import ExperimentConfig, settings
from src.backend.fedfwd.expcli import expand_preset, format_metrics, parse_config
from src.backend.fedfwd.federation import ExperimentData, build_partition, run_experiment
from src.backend.fedfwd.datasets import load_dataset
from src.backend.fedfwd.exceptions import DatasetNotFoundError

pytestmark = pytest.mark.slow


@pytest.fixture(scope="module")
def mnist():
    try:
        return load_dataset("mnist", settings.DATA_DIR, "train"), load_dataset("mnist", settings.DATA_DIR, "test")
    except DatasetNotFoundError:
        pytest.skip("MNIST 数据文件不存在")


def _desk(run_index: int) -> ExperimentConfig:
    return parse_config(preset=expand_preset("desk")[run_index], overrides={"progress": False})


def _run(config: ExperimentConfig, mnist):
    train, test = mnist
    data = ExperimentData(train=train, test=test, partition=build_partition(config, train))
    return run_experiment(config, data)


@pytest.fixture(scope="module")
def desk_logs(mnist):
    return [_run(_desk(i), mnist) for i in range(3)]


def test_iid_ff_learns(desk_logs):
    assert desk_logs[0].final_accuracy >= 0.85


def test_noniid_is_worse_and_noisier(desk_logs):
    iid, noniid = desk_logs[0], desk_logs[1]
    assert noniid.final_accuracy < iid.final_accuracy
    assert noniid.last_k_std(20) > iid.last_k_std(20)


def test_symba_converges_at_least_as_fast(desk_logs):
    ff_loss, symba = desk_logs[1], desk_logs[2]
    ff_rounds = ff_loss.rounds_to_reach(0.8)
    symba_rounds = symba.rounds_to_reach(0.8)
    assert symba_rounds is not None
    assert ff_rounds is None or symba_rounds <= ff_rounds
    assert symba.last_k_std(20) <= ff_loss.last_k_std(20)


def test_parallel_run_is_byte_identical(mnist, desk_logs):
    config = _desk(0).model_copy(update={"workers": 4})
    assert format_metrics(_run(config, mnist)) == format_metrics(desk_logs[0])
