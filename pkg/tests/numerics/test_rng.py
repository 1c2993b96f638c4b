import numpy as np

from src.backend.fedfwd.numerics import RngStream, derive_stream


def test_same_path_same_first_draw():
    assert derive_stream(42, [0, 0]).random() == derive_stream(42, [0, 0]).random()


def test_different_paths_differ():
    a = derive_stream(42, [0, 0]).random(100)
    b = derive_stream(42, [0, 1]).random(100)
    assert not np.array_equal(a, b)


def test_replay_first_thousand_draws():
    a = derive_stream(42, [1, 7, 2]).random(1000)
    b = derive_stream(42, [1, 7, 2]).random(1000)
    assert np.array_equal(a, b)


def test_child_equals_full_path():
    parent = RngStream(5, (3,))
    assert np.array_equal(parent.child(1, 2).random(10), RngStream(5, (3, 1, 2)).random(10))


def test_different_seeds_differ():
    assert not np.array_equal(derive_stream(1).random(10), derive_stream(2).random(10))


def test_permutation_and_choice():
    stream = derive_stream(3, [9])
    perm = stream.permutation(10)
    assert sorted(perm.tolist()) == list(range(10))
    chosen = stream.choice(10, size=4, replace=False)
    assert len(set(chosen.tolist())) == 4


def test_wide_component_does_not_alias_two_short_ones():
    wide = derive_stream(42, [2 ** 32]).random(5)
    pair = derive_stream(42, [0, 1]).random(5)
    assert not np.array_equal(wide, pair)


def test_trailing_zero_component_changes_stream():
    assert not np.array_equal(derive_stream(42, [3]).random(5), derive_stream(42, [3, 0]).random(5))
