import logging
from unittest.mock import patch

import pytest

from src.backend.fedfwd.conf import TrainerKind
from src.backend.fedfwd.exceptions import ConfigError
from src.backend.fedfwd.federation import BPTrainer, FFTrainer, TrainerFactory
from tests.helpers import toy_config


class CountingFFTrainer(FFTrainer):
    pass


def test_register_replaces_with_warning(caplog):
    with patch.dict(TrainerFactory._registry):
        with caplog.at_level(logging.WARNING, logger="trainer_factory"):
            TrainerFactory.register(TrainerKind.FF, CountingFFTrainer)
        assert "CountingFFTrainer" in caplog.text
        assert isinstance(TrainerFactory.create(toy_config()), CountingFFTrainer)
    assert type(TrainerFactory.create(toy_config())) is FFTrainer


def test_register_new_kind_is_silent(caplog):
    with patch.dict(TrainerFactory._registry, clear=True):
        with caplog.at_level(logging.WARNING, logger="trainer_factory"):
            TrainerFactory.register(TrainerKind.BP, BPTrainer)
        assert caplog.text == ""
        assert TrainerFactory.available() == [TrainerKind.BP]


def test_unregistered_kind_raises():
    with patch.dict(TrainerFactory._registry, clear=True):
        with pytest.raises(ConfigError):
            TrainerFactory.create(toy_config())
