import numpy as np
import pytest

from oracles import otsu_between_class_fraction, otsu_exhaustive
from textloc import OtsuBinarizer, apply_threshold, histogram, otsu_threshold


def random_histogram(rng):
    """Sparse-ish random histogram: a handful of populated bins."""
    hist = np.zeros(256, dtype=np.int64)
    bins = rng.integers(1, 12)
    idx = rng.choice(256, size=bins, replace=False)
    hist[idx] = rng.integers(1, 500, size=bins)
    return hist


def test_histogram_counts():
    img = np.array([[0, 0], [255, 7]], dtype=np.uint8)
    h = histogram(img)
    assert h[0] == 2 and h[7] == 1 and h[255] == 1
    assert h.sum() == 4


def test_histogram_constant_and_total():
    img = np.full((4, 5), 33, dtype=np.uint8)
    h = histogram(img)
    assert h[33] == 20 and h.sum() == img.size
    rng = np.random.default_rng(20)
    img = rng.integers(0, 256, size=(13, 7), dtype=np.uint8)
    assert histogram(img).sum() == img.size


def test_otsu_bimodal_smallest_tie():
    h = np.zeros(256, dtype=np.int64)
    h[10] = 100
    h[200] = 100
    assert otsu_threshold(h) == 10


def test_otsu_constant_returns_the_intensity():
    h = np.zeros(256, dtype=np.int64)
    h[77] = 9
    assert otsu_threshold(h) == 77


def test_otsu_skewed_binary_split():
    h = np.zeros(256, dtype=np.int64)
    h[0] = 3
    h[255] = 1
    assert otsu_threshold(h) == 0


def test_otsu_empty_histogram_rejected():
    with pytest.raises(ValueError, match="empty"):
        otsu_threshold(np.zeros(256, dtype=np.int64))


def test_otsu_matches_exhaustive_oracle():
    rng = np.random.default_rng(21)
    for _ in range(300):
        h = random_histogram(rng)
        assert otsu_threshold(h) == otsu_exhaustive(h)


def test_otsu_matches_fraction_between_class_oracle():
    rng = np.random.default_rng(22)
    for _ in range(40):
        h = random_histogram(rng)
        assert otsu_threshold(h) == otsu_between_class_fraction(h)


def test_otsu_invariant_under_count_scaling():
    rng = np.random.default_rng(23)
    for scale in (2, 7, 100):
        h = random_histogram(rng)
        assert otsu_threshold(h) == otsu_threshold(h * scale)


def test_apply_threshold_polarity():
    img = np.array([[0, 128, 255]], dtype=np.uint8)
    assert apply_threshold(img, 100).tolist() == [[False, True, True]]
    assert not apply_threshold(img, 255).any()
    const = np.full((3, 3), 9, dtype=np.uint8)
    assert not apply_threshold(const, 9).any()


def test_foreground_count_non_increasing_in_threshold():
    rng = np.random.default_rng(24)
    img = rng.integers(0, 256, size=(12, 12), dtype=np.uint8)
    counts = [int(apply_threshold(img, t).sum()) for t in range(256)]
    assert all(a >= b for a, b in zip(counts, counts[1:]))


def test_binarizer_estimator_api():
    rng = np.random.default_rng(25)
    img = rng.integers(0, 256, size=(8, 8), dtype=np.uint8)
    est = OtsuBinarizer().fit()
    expected = apply_threshold(img, otsu_threshold(histogram(img)))
    assert np.array_equal(est.transform(img), expected)
    assert len(est.transform([img, img])) == 2
