import numpy as np
import pytest

from src.backend.fedfwd.datasets import LabeledDataset, embed_labels
from src.backend.fedfwd.exceptions import TrainingError
from src.backend.fedfwd.ffnet import (
    FFHyper,
    FFLayer,
    LossKind,
    build_ff_model,
    goodness,
    layer_forward,
    layer_grad,
    local_train_ff,
    train_ff_batch,
)
from src.backend.fedfwd.numerics import derive_stream
from tests.helpers import toy_dataset


def _two_class_toy(n: int = 20) -> LabeledDataset:
    """d=4，L=2: 像素 2 亮表示类别 0，像素 3 亮表示类别 1"""
    labels = np.arange(n) % 2
    pixels = np.zeros((n, 4))
    pixels[labels == 0, 2] = 1.0
    pixels[labels == 1, 3] = 1.0
    return LabeledDataset(pixels=pixels, labels=labels, num_labels=2)


def test_zero_lr_keeps_model():
    model = build_ff_model(20, [8, 6], derive_stream(0, [0]))
    update = local_train_ff(model, toy_dataset(20, 20), FFHyper(lr=0.0, batch_size=5, local_epochs=2),
                            derive_stream(0, [3, 1, 0]))
    assert update.model.parameters_equal(model)
    assert update.num_samples == 20


def test_single_step_matches_layer_grad():
    data = _two_class_toy(6)
    model = build_ff_model(4, [5], derive_stream(1, [0]), num_labels=2)
    hyper = FFHyper(lr=0.1, batch_size=6, local_epochs=1)
    update = local_train_ff(model, data, hyper, derive_stream(1, [3, 1, 0]))

    x_pos = embed_labels(data.pixels, data.labels, 2)
    x_neg = embed_labels(data.pixels, 1 - data.labels, 2)
    grad = layer_grad(model.layers[0], x_pos, x_neg, model.theta)
    expected_w = model.layers[0].weights - 0.1 * grad.d_weights
    expected_b = model.layers[0].bias - 0.1 * grad.d_bias
    assert np.allclose(update.model.layers[0].weights, expected_w, rtol=0, atol=1e-12)
    assert np.allclose(update.model.layers[0].bias, expected_b, rtol=0, atol=1e-12)


def test_separable_toy_goodness_ordering():
    data = _two_class_toy(20)
    model = build_ff_model(4, [16], derive_stream(2, [0]), num_labels=2)
    hyper = FFHyper(lr=0.1, batch_size=10, local_epochs=100)
    trained = local_train_ff(model, data, hyper, derive_stream(2, [3, 1, 0])).model

    layer = trained.layers[0]
    g_pos = goodness(layer_forward(layer, embed_labels(data.pixels, data.labels, 2))).mean()
    g_neg = goodness(layer_forward(layer, embed_labels(data.pixels, 1 - data.labels, 2))).mean()
    assert g_pos > trained.theta > g_neg


def test_deterministic_for_fixed_stream():
    model = build_ff_model(20, [8, 8], derive_stream(3, [0]))
    data = toy_dataset(30, 20)
    hyper = FFHyper(lr=0.05, batch_size=7, local_epochs=2, loss_kind=LossKind.SYMBA)
    a = local_train_ff(model, data, hyper, derive_stream(3, [3, 1, 2]))
    b = local_train_ff(model, data, hyper, derive_stream(3, [3, 1, 2]))
    assert a.model.parameters_equal(b.model)
    assert a.mean_loss == b.mean_loss


def test_input_model_unchanged():
    model = build_ff_model(20, [8], derive_stream(4, [0]))
    before = model.layers[0].weights.copy()
    local_train_ff(model, toy_dataset(10, 20), FFHyper(lr=0.5), derive_stream(4, [3, 1, 0]))
    assert np.array_equal(model.layers[0].weights, before)


def test_empty_data_rejected():
    model = build_ff_model(20, [8], derive_stream(0, [0]))
    empty = LabeledDataset(pixels=np.zeros((0, 20)), labels=np.zeros(0, dtype=int))
    with pytest.raises(TrainingError):
        local_train_ff(model, empty, FFHyper(), derive_stream(0))


def test_hyper_rejects_negative_lr():
    with pytest.raises(ValueError):
        FFHyper(lr=-1.0)


def test_later_layer_parameters_do_not_reach_earlier_updates():
    data = toy_dataset(8, 20, seed=3)
    model = build_ff_model(20, [8, 6, 5], derive_stream(4, [0]))
    changed = model.layers[2]
    perturbed = model.with_blocks([
        model.layers[0],
        model.layers[1],
        FFLayer(weights=changed.weights + 0.5, bias=changed.bias - 1.0),
    ])
    hyper = FFHyper(lr=0.05, batch_size=8, local_epochs=1)
    a = train_ff_batch(model, data.pixels, data.labels, hyper, derive_stream(4, [3, 1, 0]))
    b = train_ff_batch(perturbed, data.pixels, data.labels, hyper, derive_stream(4, [3, 1, 0]))
    for i in (0, 1):
        assert np.array_equal(a.model.layers[i].weights, b.model.layers[i].weights)
        assert np.array_equal(a.model.layers[i].bias, b.model.layers[i].bias)
    assert not np.array_equal(a.model.layers[2].weights, b.model.layers[2].weights)
