import pytest

from oracles import pixel_intersection_area
from textloc import (
    EvalCounts,
    MatchConfig,
    Rect,
    compute_rates,
    f_measure,
    intersection_area,
    macro_average,
    match_detections,
    merge_counts,
    precision_recall_f,
)


def test_intersection_area_against_pixel_oracle():
    import numpy as np

    rng = np.random.default_rng(60)
    for _ in range(50):
        a = Rect(*rng.integers(0, 12, size=2).tolist(), *rng.integers(1, 10, size=2).tolist())
        b = Rect(*rng.integers(0, 12, size=2).tolist(), *rng.integers(1, 10, size=2).tolist())
        assert intersection_area(a, b) == pixel_intersection_area(a, b)


def test_perfect_detection():
    box = Rect(5, 5, 10, 4)
    counts = match_detections([box], [box], MatchConfig())
    assert counts == EvalCounts(tdb=1, fdb=0, mdb=0, actual=1)


def test_disjoint_detection_is_false_positive():
    counts = match_detections([Rect(50, 50, 5, 5)], [Rect(0, 0, 5, 5)], MatchConfig())
    assert counts == EvalCounts(tdb=0, fdb=1, mdb=0, actual=1)


def test_sixty_percent_coverage_is_tdb_and_mdb():
    truth = Rect(0, 0, 10, 10)
    det = Rect(0, 0, 10, 6)
    assert pixel_intersection_area(det, truth) == 60  # exact 0.6 of truth area
    counts = match_detections([det], [truth], MatchConfig())
    assert counts == EvalCounts(tdb=1, fdb=0, mdb=1, actual=1)


def test_coverage_below_tdb_threshold_is_fdb():
    truth = Rect(0, 0, 10, 10)
    det = Rect(0, 0, 10, 4)  # covers 40% < 0.5
    counts = match_detections([det], [truth], MatchConfig())
    assert counts == EvalCounts(tdb=0, fdb=1, mdb=0, actual=1)


def test_one_truth_matches_at_most_one_detection():
    truth = Rect(0, 0, 10, 10)
    best = Rect(0, 0, 10, 10)
    worse = Rect(0, 0, 10, 6)
    counts = match_detections([worse, best], [truth], MatchConfig())
    # the full-coverage detection wins the truth box; the other is a false positive
    assert counts == EvalCounts(tdb=1, fdb=1, mdb=0, actual=1)


def test_matching_invariant_under_detection_permutation():
    import itertools
    import numpy as np

    rng = np.random.default_rng(61)
    for _ in range(15):
        truth = [
            Rect(int(x), int(y), int(w), int(h))
            for x, y, w, h in zip(
                rng.integers(0, 20, 4), rng.integers(0, 20, 4),
                rng.integers(2, 8, 4), rng.integers(2, 8, 4),
            )
        ]
        dets = [
            Rect(int(x), int(y), int(w), int(h))
            for x, y, w, h in zip(
                rng.integers(0, 20, 5), rng.integers(0, 20, 5),
                rng.integers(2, 8, 5), rng.integers(2, 8, 5),
            )
        ]
        reference = match_detections(dets, truth, MatchConfig())
        for perm in itertools.islice(itertools.permutations(dets), 6):
            assert match_detections(list(perm), truth, MatchConfig()) == reference


def test_tdb_plus_fdb_is_detection_count():
    import numpy as np

    rng = np.random.default_rng(62)
    for _ in range(20):
        truth = [Rect(int(x), int(y), 4, 4) for x, y in rng.integers(0, 24, size=(3, 2))]
        dets = [Rect(int(x), int(y), 4, 4) for x, y in rng.integers(0, 24, size=(6, 2))]
        counts = match_detections(dets, truth, MatchConfig())
        assert counts.tdb + counts.fdb == len(dets)
        assert counts.mdb <= counts.tdb
        assert counts.actual == len(truth)


def test_match_config_validation():
    with pytest.raises(ValueError):
        MatchConfig(tdb_overlap=0.0)
    with pytest.raises(ValueError):
        MatchConfig(tdb_overlap=0.9, mdb_coverage=0.5)


def test_compute_rates_quotients():
    m = compute_rates(EvalCounts(tdb=10, fdb=0, mdb=0, actual=12))
    assert m.detection_rate == pytest.approx(10 / 12)
    m = compute_rates(EvalCounts(tdb=8, fdb=2, mdb=0, actual=8))
    assert m.false_positive_rate == pytest.approx(0.2)
    m = compute_rates(EvalCounts(tdb=4, fdb=0, mdb=1, actual=4))
    assert m.misdetection_rate == pytest.approx(0.25)


def test_zero_denominators_flagged_not_raised():
    m = compute_rates(EvalCounts())
    assert m.detection_rate == 0.0
    assert m.false_positive_rate == 0.0
    assert m.misdetection_rate == 0.0
    assert m.precision == 0.0 and m.recall == 0.0 and m.f_measure == 0.0
    assert set(m.degenerate) == {
        "detection_rate",
        "false_positive_rate",
        "misdetection_rate",
        "precision",
        "recall",
        "f_measure",
    }


def test_precision_recall_f_identities():
    counts = EvalCounts(tdb=6, fdb=2, mdb=1, actual=10)
    m = precision_recall_f(counts)
    assert m.precision == pytest.approx(6 / 8)
    assert m.recall == pytest.approx(6 / 10)
    assert m.f_measure == pytest.approx(f_measure(m.precision, m.recall))
    assert m.precision == pytest.approx(1.0 - m.false_positive_rate)
    assert m.recall == pytest.approx(m.detection_rate)


def test_f_measure_reference_values():
    # reference (precision, recall) -> f pairs, pinned at +/-5e-4
    assert f_measure(0.7423, 0.8734) == pytest.approx(0.8025, abs=5e-4)
    assert f_measure(0.7245, 0.7934) == pytest.approx(0.7574, abs=5e-4)


def test_f_measure_properties():
    assert f_measure(1.0, 1.0) == 1.0
    assert f_measure(0.0, 0.7) == 0.0
    assert f_measure(0.0, 0.0) == 0.0
    import numpy as np

    rng = np.random.default_rng(63)
    for _ in range(50):
        p, r = rng.random(2)
        if p == 0 or r == 0:
            continue
        f = f_measure(p, r)
        assert min(p, r) <= f <= 2 * min(p, r)


def test_merge_counts_fieldwise():
    total = merge_counts(
        [EvalCounts(1, 2, 0, 3), EvalCounts(4, 0, 1, 5), EvalCounts(0, 0, 0, 0)]
    )
    assert total == EvalCounts(tdb=5, fdb=2, mdb=1, actual=8)


def test_macro_average_is_mean_of_rates():
    a = compute_rates(EvalCounts(tdb=1, fdb=1, mdb=0, actual=1))
    b = compute_rates(EvalCounts(tdb=1, fdb=0, mdb=0, actual=2))
    m = macro_average([a, b])
    assert m.precision == pytest.approx((0.5 + 1.0) / 2)
    assert m.recall == pytest.approx((1.0 + 0.5) / 2)
