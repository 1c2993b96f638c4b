import numpy as np
import pytest

from src.backend.fedfwd.exceptions import ShapeError
from src.backend.fedfwd.ffnet import FFLayer, LossKind, layer_grad, layer_loss
from src.backend.fedfwd.numerics import finite_diff_grad, relative_error


def _random_case(rng, max_dim=32, max_batch=8):
    in_dim = int(rng.integers(2, max_dim + 1))
    out_dim = int(rng.integers(2, max_dim + 1))
    batch = int(rng.integers(1, max_batch + 1))
    layer = FFLayer(weights=rng.normal(scale=0.5, size=(out_dim, in_dim)), bias=rng.normal(scale=0.1, size=out_dim))
    x_pos = rng.random((batch, in_dim))
    x_neg = rng.random((batch, in_dim))
    theta = float(rng.uniform(0.5, 4.0))
    return layer, x_pos, x_neg, theta


def _numeric_grads(layer, x_pos, x_neg, theta, kind, alpha):
    def loss_w(w):
        return layer_loss(FFLayer(weights=w, bias=layer.bias), x_pos, x_neg, theta, kind, alpha)

    def loss_b(b):
        return layer_loss(FFLayer(weights=layer.weights, bias=b), x_pos, x_neg, theta, kind, alpha)

    return finite_diff_grad(loss_w, layer.weights), finite_diff_grad(loss_b, layer.bias)


@pytest.mark.parametrize("kind", [LossKind.FF, LossKind.SYMBA])
def test_gradient_matches_finite_differences(kind):
    rng = np.random.default_rng(1234 if kind == LossKind.FF else 4321)
    for _ in range(20):
        layer, x_pos, x_neg, theta = _random_case(rng)
        alpha = float(rng.uniform(0.5, 2.0))
        grad = layer_grad(layer, x_pos, x_neg, theta, kind, alpha)
        num_w, num_b = _numeric_grads(layer, x_pos, x_neg, theta, kind, alpha)
        assert relative_error(grad.d_weights, num_w) < 1e-4
        assert relative_error(grad.d_bias, num_b) < 1e-4
        assert grad.mean_loss == pytest.approx(layer_loss(layer, x_pos, x_neg, theta, kind, alpha))


def test_fixed_ff_case():
    rng = np.random.default_rng(7)
    layer = FFLayer(weights=rng.normal(scale=0.3, size=(8, 16)), bias=rng.normal(scale=0.1, size=8))
    x_pos, x_neg = rng.random((8, 16)), rng.random((8, 16))
    grad = layer_grad(layer, x_pos, x_neg, 2.0, LossKind.FF)
    num_w, _ = _numeric_grads(layer, x_pos, x_neg, 2.0, LossKind.FF, 1.0)
    assert relative_error(grad.d_weights, num_w) < 1e-4


def test_dead_layer_has_zero_gradient():
    layer = FFLayer(weights=-np.ones((3, 4)), bias=-np.ones(3))
    x = np.random.default_rng(0).random((5, 4))
    grad = layer_grad(layer, x, x, 2.0)
    assert np.array_equal(grad.d_weights, np.zeros((3, 4)))
    assert np.array_equal(grad.d_bias, np.zeros(3))


def test_symba_requires_paired_batches():
    layer = FFLayer(weights=np.ones((2, 3)), bias=np.zeros(2))
    with pytest.raises(ShapeError):
        layer_grad(layer, np.ones((3, 3)), np.ones((2, 3)), 2.0, LossKind.SYMBA)


def test_input_dim_mismatch():
    layer = FFLayer(weights=np.ones((2, 3)), bias=np.zeros(2))
    with pytest.raises(ShapeError):
        layer_grad(layer, np.ones((2, 4)), np.ones((2, 4)), 2.0)
