"""Batch command-line interface.

Two subcommands:

* ``detect`` runs the localization pipeline over a P5/P6 image or a directory
  of frames and writes ``x y w h`` detection lines (per-frame sections headed
  by ``# frame <name>`` for directories).
* ``eval`` matches detection files against ground-truth files paired by
  basename and reports block-level metrics in human- and machine-readable
  form.

Exit codes: 0 success, 1 usage/configuration error, 2 I/O error, 3 internal
stage failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io as tio
from .detector import StageError, TextDetector, run_sequence, save_snapshots
from .evaluation import (
    MatchConfig,
    compute_rates,
    macro_average,
    match_detections,
    merge_counts,
)
from .io import AnnotationError, PnmError
from .localize import render_overlay

_DETECTOR_DEFAULTS = {
    "median_window": 3,
    "magnitude": "approx",
    "bridge_se": (3, 3),
    "fill_se": (5, 1),
    "min_area_fraction": 0.20,
    "min_edge_density": 0.10,
}


class _Parser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_se(text: str):
    """Parse a WxH structuring-element size like ``3x3`` or ``5x1``."""
    parts = str(text).lower().split("x")
    if len(parts) != 2:
        raise ValueError(f"expected WxH, got {text!r}")
    return int(parts[0]), int(parts[1])


_CONFIG_PARSERS = {
    "median_window": int,
    "magnitude": str,
    "bridge_se": parse_se,
    "fill_se": parse_se,
    "min_area_fraction": float,
    "min_edge_density": float,
    "workers": int,
}


def parse_config_file(path) -> dict:
    """Read a ``key = value`` config file ('#' starts a comment line)."""
    options = {}
    with open(path, encoding="utf-8") as stream:
        for lineno, raw in enumerate(stream, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key = key.strip()
            if key not in _CONFIG_PARSERS:
                raise ValueError(f"{path}:{lineno}: unknown option {key!r}")
            try:
                options[key] = _CONFIG_PARSERS[key](value.strip())
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: bad value for {key!r}: {exc}") from exc
    return options


def _build_parser() -> _Parser:
    parser = _Parser(prog="textloc", description="Edge-emphasis text localization")
    sub = parser.add_subparsers(dest="command", required=True)

    det = sub.add_parser("detect", help="localize text in an image or frame directory")
    det.add_argument("input", help="P5/P6 image file or directory of frames")
    det.add_argument("--out", help="write detections to this file (default: stdout)")
    det.add_argument("--config", help="key = value configuration file")
    det.add_argument("--median-window", type=int, dest="median_window")
    det.add_argument("--magnitude", choices=("exact", "approx"))
    det.add_argument("--bridge-se", type=parse_se, dest="bridge_se", metavar="WxH")
    det.add_argument("--fill-se", type=parse_se, dest="fill_se", metavar="WxH")
    det.add_argument("--min-area-fraction", type=float, dest="min_area_fraction")
    det.add_argument("--min-edge-density", type=float, dest="min_edge_density")
    det.add_argument("--debug-dir", dest="debug_dir", help="write per-stage snapshots here")
    det.add_argument("--dump-edges", dest="dump_edges", metavar="PATH")
    det.add_argument("--dump-binary", dest="dump_binary", metavar="PATH")
    det.add_argument("--dump-components", dest="dump_components", metavar="PATH")
    det.add_argument("--dump-overlay", dest="dump_overlay", metavar="PATH")
    det.add_argument("--workers", type=int, default=None, help="concurrent frames (default 1)")
    det.add_argument("--strict", action="store_true", help="abort on the first bad frame")

    ev = sub.add_parser("eval", help="score detections against ground truth")
    ev.add_argument("--gt", required=True, help="ground-truth file or directory")
    ev.add_argument("--pred", required=True, help="detection file or directory")
    ev.add_argument("--macro", action="store_true", help="average per-image rates")
    ev.add_argument("--tdb-overlap", type=float, default=0.5, dest="tdb_overlap")
    ev.add_argument("--mdb-coverage", type=float, default=0.95, dest="mdb_coverage")
    return parser


def _resolve_detect_params(args) -> tuple[dict, int]:
    params = dict(_DETECTOR_DEFAULTS)
    workers = 1
    if args.config:
        file_options = parse_config_file(args.config)
        workers = file_options.pop("workers", workers)
        params.update(file_options)
    for key in _DETECTOR_DEFAULTS:
        value = getattr(args, key)
        if value is not None:
            params[key] = value
    if args.workers is not None:
        workers = args.workers
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    return params, workers


def _dump_stage_files(args, stages):
    if args.dump_edges:
        tio.save_image(stages.edges, args.dump_edges)
    if args.dump_binary:
        tio.save_image(stages.binary.astype("uint8") * 255, args.dump_binary)
    if args.dump_components:
        from .detector import _component_view

        tio.save_image(_component_view(stages.label_map), args.dump_components)
    if args.dump_overlay:
        tio.save_image(render_overlay(stages.input, stages.boxes), args.dump_overlay)


def _open_out(args):
    if args.out:
        return open(args.out, "w", encoding="utf-8"), True
    return sys.stdout, False


def _cmd_detect(args) -> int:
    params, workers = _resolve_detect_params(args)
    detector = TextDetector(**params).fit()
    source = Path(args.input)
    if not source.exists():
        raise FileNotFoundError(f"input not found: {source}")

    if source.is_dir():
        frames = tio.load_frame_sequence(source)
        on_stages = None
        if args.debug_dir:
            debug_root = Path(args.debug_dir)

            def on_stages(path, stages):
                save_snapshots(stages, debug_root / path.stem)

        if any((args.dump_edges, args.dump_binary, args.dump_components, args.dump_overlay)):
            raise ValueError("--dump-* flags need a single-image input; use --debug-dir")
        results = run_sequence(
            frames, detector, workers=workers, strict=args.strict, on_stages=on_stages
        )
        out, owned = _open_out(args)
        try:
            for result in results:
                out.write(f"# frame {result.name}\n")
                if result.error is not None:
                    out.write(f"# error: {result.error}\n")
                    print(f"textloc: frame {result.name} failed: {result.error}", file=sys.stderr)
                else:
                    tio.write_detections(result.boxes, out)
        finally:
            if owned:
                out.close()
        return 0

    stages = detector.stages(tio.load_image(source))
    if args.debug_dir:
        save_snapshots(stages, args.debug_dir)
    _dump_stage_files(args, stages)
    out, owned = _open_out(args)
    try:
        tio.write_detections(stages.boxes, out)
    finally:
        if owned:
            out.close()
    return 0


def _pair_files(gt: Path, pred: Path):
    """Pair ground-truth and prediction sources by basename."""
    if gt.is_file():
        return [(gt.stem, gt, pred if pred.is_file() else None)]
    pairs = []
    pred_index = {p.stem: p for p in pred.glob("*.txt")} if pred.is_dir() else {}
    for gt_file in sorted(gt.glob("*.txt"), key=lambda p: p.name):
        pairs.append((gt_file.stem, gt_file, pred_index.pop(gt_file.stem, None)))
    for leftover in sorted(pred_index):
        print(f"textloc: prediction {leftover} has no ground truth; skipped", file=sys.stderr)
    return pairs


def _cmd_eval(args) -> int:
    cfg = MatchConfig(tdb_overlap=args.tdb_overlap, mdb_coverage=args.mdb_coverage)
    gt, pred = Path(args.gt), Path(args.pred)
    if not gt.exists():
        raise FileNotFoundError(f"ground truth not found: {gt}")
    if not pred.exists():
        raise FileNotFoundError(f"predictions not found: {pred}")

    pairs = _pair_files(gt, pred)
    if not pairs:
        raise ValueError(f"no ground-truth files found under {gt}")
    per_image = []
    for name, gt_path, pred_path in pairs:
        truth = tio.load_annotations(gt_path)
        if pred_path is None:
            print(f"textloc: no predictions for {name}; counting as empty", file=sys.stderr)
            detections = []
        else:
            detections = tio.load_annotations(pred_path)
        per_image.append((name, match_detections(detections, truth, cfg)))

    for name, counts in per_image:
        print(
            f"{name}: tdb={counts.tdb} fdb={counts.fdb} "
            f"mdb={counts.mdb} actual={counts.actual}"
        )

    pooled = merge_counts(c for _, c in per_image)
    if args.macro:
        metrics = macro_average(compute_rates(c) for _, c in per_image)
        averaging = "macro"
    else:
        metrics = compute_rates(pooled)
        averaging = "micro"

    print()
    print(f"images evaluated : {len(per_image)}")
    print(f"blocks (actual)  : {pooled.actual}")
    print(f"detection rate   : {metrics.detection_rate:.4f}")
    print(f"false positives  : {metrics.false_positive_rate:.4f}")
    print(f"misdetections    : {metrics.misdetection_rate:.4f}")
    print(
        f"P / R / F        : {metrics.precision:.4f} / "
        f"{metrics.recall:.4f} / {metrics.f_measure:.4f}"
    )
    print()
    print(f"averaging={averaging}")
    for key in ("tdb", "fdb", "mdb", "actual"):
        print(f"{key}={getattr(pooled, key)}")
    for key in (
        "detection_rate",
        "false_positive_rate",
        "misdetection_rate",
        "precision",
        "recall",
        "f_measure",
    ):
        print(f"{key}={getattr(metrics, key):.6f}")
    print(f"degenerate={','.join(metrics.degenerate)}")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "detect":
            return _cmd_detect(args)
        return _cmd_eval(args)
    except (PnmError, AnnotationError, OSError) as exc:
        print(f"textloc: i/o error: {exc}", file=sys.stderr)
        return 2
    except StageError as exc:
        print(f"textloc: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"textloc: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
