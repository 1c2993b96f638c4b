import pytest

from src.backend.fedfwd.federation import FederationConfig, sample_clients, selected_count
from src.backend.fedfwd.numerics import derive_stream


def test_ten_percent_of_hundred():
    ids = sample_clients(100, 0.1, derive_stream(0, [2, 1]))
    assert len(ids) == 10
    assert len(set(ids)) == 10
    assert all(0 <= c < 100 for c in ids)
    assert ids == sorted(ids)


def test_full_participation():
    assert sample_clients(7, 1.0, derive_stream(0, [2, 1])) == list(range(7))


def test_same_seed_and_round_repeat():
    assert sample_clients(100, 0.1, derive_stream(3, [2, 5])) == sample_clients(100, 0.1, derive_stream(3, [2, 5]))


def test_rounds_draw_different_clients():
    draws = {tuple(sample_clients(100, 0.1, derive_stream(3, [2, r]))) for r in range(1, 6)}
    assert len(draws) > 1


@pytest.mark.parametrize("m,fraction,expected", [(10, 0.7, 7), (100, 0.1, 10), (3, 0.01, 1), (10, 0.55, 6), (5, 1.0, 5)])
def test_selected_count(m, fraction, expected):
    assert selected_count(m, fraction) == expected


def test_federation_config_clients_per_round():
    assert FederationConfig(m_clients=100, participation_fraction=0.1).clients_per_round == 10
