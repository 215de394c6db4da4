"""Block-level detection evaluation.

Detections are matched one-to-one against ground-truth boxes by how much of
each truth box's area they cover. A matched detection is a truly detected
block (TDB); unmatched detections are false detections (FDB); a TDB whose
coverage of its truth box stays below the coverage threshold also counts as a
block with missing data (MDB). Rates derive from the pooled counts:

    detection rate      = TDB / actual
    false positive rate = FDB / (TDB + FDB)
    misdetection rate   = MDB / TDB
    precision           = TDB / (TDB + FDB)
    recall              = TDB / actual
    f-measure           = 2PR / (P + R)

Zero denominators yield a rate of 0 and are flagged, never raised, so batch
evaluation of empty images cannot abort.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .geometry import intersection_area
from .validation import check_ratio


@dataclass(frozen=True)
class MatchConfig:
    """Coverage thresholds for detection/truth matching.

    ``tdb_overlap`` is the minimum fraction of a truth box's area a detection
    must cover to match it; a matched pair covering less than
    ``mdb_coverage`` of the truth box is additionally counted as missing
    data.
    """

    tdb_overlap: float = 0.5
    mdb_coverage: float = 0.95

    def __post_init__(self):
        check_ratio(self.tdb_overlap, "tdb_overlap", closed_low=False)
        check_ratio(self.mdb_coverage, "mdb_coverage", closed_low=False)
        if self.tdb_overlap > self.mdb_coverage:
            raise ValueError(
                f"tdb_overlap ({self.tdb_overlap}) must not exceed "
                f"mdb_coverage ({self.mdb_coverage})"
            )


@dataclass(frozen=True)
class EvalCounts:
    """TDB/FDB/MDB tallies plus the number of ground-truth blocks."""

    tdb: int = 0
    fdb: int = 0
    mdb: int = 0
    actual: int = 0

    def __post_init__(self):
        if min(self.tdb, self.fdb, self.mdb, self.actual) < 0:
            raise ValueError("counts must be nonnegative")
        if self.mdb > self.tdb:
            raise ValueError(f"mdb ({self.mdb}) cannot exceed tdb ({self.tdb})")

    def __add__(self, other: "EvalCounts") -> "EvalCounts":
        return EvalCounts(
            tdb=self.tdb + other.tdb,
            fdb=self.fdb + other.fdb,
            mdb=self.mdb + other.mdb,
            actual=self.actual + other.actual,
        )


@dataclass(frozen=True)
class Metrics:
    """Derived rates; ``degenerate`` names the rates whose denominator was 0."""

    detection_rate: float = 0.0
    false_positive_rate: float = 0.0
    misdetection_rate: float = 0.0
    precision: float = 0.0
    recall: float = 0.0
    f_measure: float = 0.0
    degenerate: tuple = field(default=())


def match_detections(detections, truth, cfg: MatchConfig = MatchConfig()) -> EvalCounts:
    """Classify detections against ground truth as TDB/FDB/MDB.

    Matching is greedy in descending coverage order and one-to-one on both
    sides. Coverage ties are broken by truth index and then by detection
    geometry, so the resulting counts do not depend on the order of the
    detection list.
    """
    dets = list(detections)
    gts = list(truth)

    candidates = []
    for gi, g in enumerate(gts):
        g_area = g.area
        for di, d in enumerate(dets):
            coverage = intersection_area(d, g) / g_area
            if coverage >= cfg.tdb_overlap:
                candidates.append((-coverage, gi, (d.x, d.y, d.w, d.h), di))
    candidates.sort()

    matched_dets: set[int] = set()
    matched_gts: set[int] = set()
    mdb = 0
    for neg_cov, gi, _, di in candidates:
        if di in matched_dets or gi in matched_gts:
            continue
        matched_dets.add(di)
        matched_gts.add(gi)
        if -neg_cov < cfg.mdb_coverage:
            mdb += 1

    tdb = len(matched_dets)
    return EvalCounts(tdb=tdb, fdb=len(dets) - tdb, mdb=mdb, actual=len(gts))


def merge_counts(counts) -> EvalCounts:
    """Fieldwise sum for dataset-level (micro-averaged) rates."""
    total = EvalCounts()
    for c in counts:
        total = total + c
    return total


def f_measure(precision: float, recall: float) -> float:
    """Harmonic mean 2PR/(P + R); 0 when both inputs are 0."""
    if precision + recall == 0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def _rate(num: int, den: int, name: str, flags: list) -> float:
    if den == 0:
        flags.append(name)
        return 0.0
    return num / den


def _metrics(c: EvalCounts) -> Metrics:
    flags: list = []
    detection_rate = _rate(c.tdb, c.actual, "detection_rate", flags)
    false_positive_rate = _rate(c.fdb, c.tdb + c.fdb, "false_positive_rate", flags)
    misdetection_rate = _rate(c.mdb, c.tdb, "misdetection_rate", flags)
    precision = _rate(c.tdb, c.tdb + c.fdb, "precision", flags)
    recall = _rate(c.tdb, c.actual, "recall", flags)
    if precision + recall == 0:
        flags.append("f_measure")
    return Metrics(
        detection_rate=detection_rate,
        false_positive_rate=false_positive_rate,
        misdetection_rate=misdetection_rate,
        precision=precision,
        recall=recall,
        f_measure=f_measure(precision, recall),
        degenerate=tuple(flags),
    )


def compute_rates(c: EvalCounts) -> Metrics:
    """Detection, false-positive and misdetection rates from pooled counts."""
    return _metrics(c)


def precision_recall_f(c: EvalCounts) -> Metrics:
    """Precision, recall and f-measure from pooled counts."""
    return _metrics(c)


def macro_average(per_image_metrics) -> Metrics:
    """Arithmetic mean of per-image rates (degenerate rates enter as 0)."""
    ms = list(per_image_metrics)
    if not ms:
        return Metrics(degenerate=("empty",))
    n = len(ms)
    return Metrics(
        detection_rate=sum(m.detection_rate for m in ms) / n,
        false_positive_rate=sum(m.false_positive_rate for m in ms) / n,
        misdetection_rate=sum(m.misdetection_rate for m in ms) / n,
        precision=sum(m.precision for m in ms) / n,
        recall=sum(m.recall for m in ms) / n,
        f_measure=sum(m.f_measure for m in ms) / n,
    )
