import pytest

from src.backend.fedfwd.conf import TrainerKind
from src.backend.fedfwd.exceptions import DatasetNotFoundError
from src.backend.fedfwd.federation import TrainerFactory, prepare_data, run_experiment, run_federation
from src.backend.fedfwd.federation.trainers import FFTrainer
from tests.helpers import toy_config, toy_experiment_data, write_mnist_dir


def test_zero_rounds_logs_only_initial_evaluation():
    config = toy_config(rounds=0)
    log = run_experiment(config, toy_experiment_data(config))
    assert [m.round for m in log] == [0]


def test_same_seed_same_log():
    config = toy_config(rounds=3)
    a = run_experiment(config, toy_experiment_data(config))
    b = run_experiment(config, toy_experiment_data(config))
    assert a == b
    assert [m.round for m in a] == [0, 1, 2, 3]


def test_different_seed_different_clients():
    a = run_experiment(toy_config(rounds=3, seed=1, m_clients=10, fraction=0.3),
                       toy_experiment_data(toy_config(seed=1, m_clients=10, fraction=0.3)))
    b = run_experiment(toy_config(rounds=3, seed=2, m_clients=10, fraction=0.3),
                       toy_experiment_data(toy_config(seed=2, m_clients=10, fraction=0.3)))
    assert [m.sampled_clients for m in a] != [m.sampled_clients for m in b]


def test_run_federation_returns_final_model():
    config = toy_config(rounds=2, trainer=TrainerKind.BP)
    state = run_federation(config, toy_experiment_data(config))
    assert state.round_index == 2
    assert state.global_model.input_dim == 20


def test_prepare_data_from_files(tmp_path):
    write_mnist_dir(tmp_path, n_train=60, n_test=20)
    config = toy_config(data_dir=tmp_path, m_clients=3, max_train_samples=30, max_test_samples=10)
    data = prepare_data(config)
    assert len(data.train) == 30
    assert len(data.test) == 10
    assert sum(data.partition.sizes) == 30


def test_prepare_data_noniid(tmp_path):
    write_mnist_dir(tmp_path, n_train=60, n_test=20)
    data = prepare_data(toy_config(data_dir=tmp_path, m_clients=5, iid=False))
    assert len(data.partition) == 5
    data.partition.validate(60)


def test_missing_data_surfaces_path(tmp_path):
    with pytest.raises(DatasetNotFoundError) as exc:
        run_experiment(toy_config(data_dir=tmp_path / "nothing"))
    assert "nothing" in exc.value.message


def test_factory_registry():
    assert set(TrainerFactory.available()) == {TrainerKind.FF, TrainerKind.BP}
    assert isinstance(TrainerFactory.create(toy_config()), FFTrainer)
