import numpy as np

from src.backend.fedfwd.datasets import LabeledSample, embed_labels
from src.backend.fedfwd.ffnet import (
    FFLayer,
    FFModel,
    build_ff_model,
    goodness,
    label_scores,
    layer_forward,
    layer_norm,
    predict,
    predict_batch,
)
from src.backend.fedfwd.numerics import derive_stream


def test_zero_model_ties_to_label_zero():
    model = FFModel(layers=(FFLayer(weights=np.zeros((3, 12)), bias=np.zeros(3)),))
    x = LabeledSample(pixels=np.random.default_rng(0).random(12), label=4)
    assert predict(model, x) == 0


def test_hand_set_two_label_model():
    reads_pixel0 = FFModel(layers=(FFLayer(weights=np.array([[1.0, 0.0, 0.0, 0.0]]), bias=np.zeros(1)),),
                           num_labels=2)
    reads_pixel1 = FFModel(layers=(FFLayer(weights=np.array([[0.0, 1.0, 0.0, 0.0]]), bias=np.zeros(1)),),
                           num_labels=2)
    x = LabeledSample(pixels=np.array([0.0, 0.0, 0.3, 0.7]), label=1)
    assert predict(reads_pixel0, x) == 0
    assert predict(reads_pixel1, x) == 1


def test_scores_match_composition():
    model = build_ff_model(16, [6, 5], derive_stream(0, [0]))
    pixels = np.random.default_rng(1).random((4, 16))
    scores = label_scores(model, pixels)
    for label in range(10):
        h = embed_labels(pixels, np.full(4, label))
        a1 = layer_forward(model.layers[0], h)
        a2 = layer_forward(model.layers[1], layer_norm(a1))
        assert np.allclose(scores[:, label], goodness(a1) + goodness(a2), rtol=0, atol=1e-12)


def test_skip_first_layer():
    model = build_ff_model(16, [6, 5], derive_stream(2, [0]))
    pixels = np.random.default_rng(3).random((3, 16))
    scores = label_scores(model, pixels, skip_first_layer=True)
    h = embed_labels(pixels, np.full(3, 7))
    a2 = layer_forward(model.layers[1], layer_norm(layer_forward(model.layers[0], h)))
    assert np.allclose(scores[:, 7], goodness(a2), rtol=0, atol=1e-12)


def test_batch_matches_single_and_chunks():
    model = build_ff_model(16, [6], derive_stream(4, [0]))
    pixels = np.random.default_rng(5).random((9, 16))
    scores = label_scores(model, pixels)
    single_scores = np.vstack([label_scores(model, p[None, :]) for p in pixels])
    assert np.allclose(single_scores, scores, rtol=0, atol=1e-12)
    assert np.allclose(label_scores(model, pixels, chunk_size=2), scores, rtol=0, atol=1e-12)

    top_two = np.sort(scores, axis=1)[:, -2:]
    clear = top_two[:, 1] - top_two[:, 0] > 1e-9
    batch = predict_batch(model, pixels)
    singles = np.array([predict(model, LabeledSample(pixels=p, label=0)) for p in pixels])
    assert clear.any()
    assert np.array_equal(batch[clear], singles[clear])


def test_label_independent_goodness_keeps_prediction():
    base = build_ff_model(16, [6], derive_stream(6, [0]))
    # 不读取标签像素的神经元对每个候选标签贡献相同的 goodness
    extra = np.random.default_rng(7).random((4, 16))
    extra[:, :10] = 0.0
    layer = base.layers[0]
    shifted = base.with_blocks([FFLayer(weights=np.vstack([layer.weights, extra]),
                                        bias=np.concatenate([layer.bias, np.ones(4)]))])
    pixels = np.random.default_rng(8).random((12, 16))

    offset = label_scores(shifted, pixels) - label_scores(base, pixels)
    assert np.allclose(offset, offset[:, :1], rtol=0, atol=1e-9)
    assert offset.min() > 0
    assert np.array_equal(predict_batch(shifted, pixels), predict_batch(base, pixels))
