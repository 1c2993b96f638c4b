import math
from unittest.mock import patch

import pytest

from src.backend.fedfwd.exceptions import ConfigError
from src.backend.fedfwd.expcli import TimingRow, format_timing, host_info, median_round_seconds, time_rounds, write_timing
from src.backend.fedfwd.federation import TrainedRound
from tests.helpers import toy_config, toy_experiment_data


def test_one_batch_size_gives_both_measurements():
    config = toy_config()
    rows = time_rounds(config, [1], data=toy_experiment_data(config))
    assert len(rows) == 1
    row = rows[0]
    assert row.batch_size == 1
    for seconds in (row.ff_seconds, row.bp_seconds):
        assert seconds > 0 and math.isfinite(seconds)


def test_rows_follow_batch_order():
    config = toy_config()
    rows = time_rounds(config, [8, 2], data=toy_experiment_data(config))
    assert [r.batch_size for r in rows] == [8, 2]


@patch('src.backend.fedfwd.expcli.timing.train_round')
def test_median_skips_warmup(mock_round):
    config = toy_config()
    data = toy_experiment_data(config)
    mock_round.side_effect = [
        TrainedRound(global_model=None, sampled_clients=[], updates=[], seconds=s) for s in (9.0, 1.0, 5.0, 3.0)
    ]
    assert median_round_seconds(config, data, timed_rounds=3) == 3.0
    assert mock_round.call_count == 4


def test_too_few_timed_rounds():
    config = toy_config()
    with pytest.raises(ConfigError):
        median_round_seconds(config, toy_experiment_data(config), timed_rounds=2)


def test_empty_batch_list():
    with pytest.raises(ConfigError):
        time_rounds(toy_config(), [])


def test_write_timing(tmp_path):
    rows = [TimingRow(batch_size=1, ff_seconds=0.75, bp_seconds=0.25)]
    path = write_timing(rows, tmp_path / "t.csv")
    assert path.read_text(encoding="utf-8") == format_timing(rows)
    assert format_timing(rows).splitlines() == ["batch_size,ff_seconds,bp_seconds,ratio", "1,0.750000,0.250000,3.000000"]


def test_host_info():
    info = host_info()
    assert info["cpu_count_logical"] >= 1
    assert info["memory_total_gb"] > 0


@pytest.mark.slow
def test_ff_overhead_ratio_shrinks_with_batch_size():
    config = toy_config(depth=2, width=500, m_clients=1, fraction=1.0, local_epochs=1, lr=0.003)
    data = toy_experiment_data(config, n_train=1024, n_test=10, dim=784)
    rows = time_rounds(config, [1, 1024], data=data)
    assert rows[0].ratio > rows[-1].ratio
