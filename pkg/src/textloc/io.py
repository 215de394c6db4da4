"""Raster and annotation I/O.

Images travel as binary portable pixmaps: ``P5`` graymaps decode to 2-D uint8
arrays and ``P6`` pixmaps to (h, w, 3) uint8 arrays, both with maxval 255.
Bounding boxes are stored one ``x y w h`` record per line in UTF-8 text files;
lines starting with ``#`` are comments.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .geometry import Rect
from .validation import check_gray_image, check_rgb_image

FRAME_SUFFIXES = (".pgm", ".ppm", ".pnm")

_LUMA_R, _LUMA_G, _LUMA_B = 299, 587, 114  # BT.601 weights, scaled by 1000


class PnmError(ValueError):
    """Malformed or unsupported portable-pixmap data."""


class AnnotationError(ValueError):
    """Malformed bounding-box annotation line."""


def _open_binary(source):
    if isinstance(source, (str, Path)):
        return open(source, "rb"), True
    return source, False


def _read_header_token(stream) -> bytes:
    """Read one whitespace-delimited header token, skipping '#' comments."""
    token = b""
    while True:
        c = stream.read(1)
        if c == b"":
            break
        if c == b"#":
            while c not in (b"", b"\n", b"\r"):
                c = stream.read(1)
            continue
        if c.isspace():
            if token:
                break
            continue
        token += c
    return token


def _read_header_int(stream, what: str) -> int:
    token = _read_header_token(stream)
    if not token.isdigit():
        raise PnmError(f"malformed header: expected {what}, got {token!r}")
    return int(token)


def load_image(source) -> np.ndarray:
    """Decode a binary portable pixmap.

    Parameters
    ----------
    source : path or binary stream
        ``P5`` (graymap) or ``P6`` (pixmap) data with maxval 255.

    Returns
    -------
    np.ndarray
        uint8 array of shape (h, w) for P5 input or (h, w, 3) for P6.
    """
    stream, owned = _open_binary(source)
    try:
        magic = stream.read(2)
        if magic not in (b"P5", b"P6"):
            raise PnmError(f"malformed header: unsupported magic {magic!r}")
        width = _read_header_int(stream, "width")
        height = _read_header_int(stream, "height")
        maxval = _read_header_int(stream, "maxval")
        if width < 1 or height < 1:
            raise PnmError(f"malformed header: bad dimensions {width}x{height}")
        if maxval != 255:
            raise PnmError(f"unsupported maxval {maxval} (only 255)")
        channels = 1 if magic == b"P5" else 3
        expected = width * height * channels
        payload = stream.read(expected)
        if len(payload) < expected:
            raise PnmError(
                f"truncated pixel payload: expected {expected} bytes, got {len(payload)}"
            )
        data = np.frombuffer(payload, dtype=np.uint8)
        if channels == 1:
            return data.reshape(height, width).copy()
        return data.reshape(height, width, 3).copy()
    finally:
        if owned:
            stream.close()


def save_image(img: np.ndarray, sink) -> None:
    """Encode a uint8 image as P5 (2-D input) or P6 ((h, w, 3) input)."""
    arr = np.asarray(img)
    if arr.ndim == 2:
        arr = check_gray_image(arr)
        magic = b"P5"
    else:
        arr = check_rgb_image(arr)
        magic = b"P6"
    h, w = arr.shape[:2]
    header = magic + b"\n" + f"{w} {h}\n255\n".encode("ascii")
    stream, owned = (open(sink, "wb"), True) if isinstance(sink, (str, Path)) else (sink, False)
    try:
        stream.write(header)
        stream.write(arr.tobytes())
    finally:
        if owned:
            stream.close()


def to_grayscale(img: np.ndarray) -> np.ndarray:
    """Convert an RGB image to 8-bit luma.

    Uses BT.601 weights with round-half-up, computed in exact integer
    arithmetic so the result is platform independent:
    luma = (299*R + 587*G + 114*B + 500) // 1000.
    """
    arr = check_rgb_image(img).astype(np.int64)
    luma = (_LUMA_R * arr[:, :, 0] + _LUMA_G * arr[:, :, 1] + _LUMA_B * arr[:, :, 2] + 500) // 1000
    return luma.astype(np.uint8)


def ensure_gray(img: np.ndarray) -> np.ndarray:
    """Accept a gray or RGB uint8 image and return it as gray."""
    arr = np.asarray(img)
    if arr.ndim == 3:
        return to_grayscale(arr)
    return check_gray_image(arr)


def load_frame_sequence(directory) -> list[Path]:
    """List the decodable frames of a directory in lexicographic name order.

    Files whose suffix is not one of ``.pgm``/``.ppm``/``.pnm`` are skipped.
    """
    root = Path(directory)
    frames = [
        p for p in root.iterdir()
        if p.is_file() and p.suffix.lower() in FRAME_SUFFIXES
    ]
    frames.sort(key=lambda p: p.name)
    return frames


def _open_text(source, mode):
    if isinstance(source, (str, Path)):
        return open(source, mode, encoding="utf-8"), True
    return source, False


def load_annotations(source) -> list[Rect]:
    """Parse ``x y w h`` bounding-box records.

    Blank lines and lines starting with ``#`` are skipped; fields may be
    separated by whitespace or commas. Raises :class:`AnnotationError` naming
    the offending line on any malformed record.
    """
    stream, owned = _open_text(source, "r")
    try:
        boxes = []
        for lineno, raw in enumerate(stream, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            tokens = line.replace(",", " ").split()
            if len(tokens) != 4:
                raise AnnotationError(
                    f"line {lineno}: expected 4 fields 'x y w h', got {len(tokens)}"
                )
            try:
                x, y, w, h = (int(t) for t in tokens)
            except ValueError:
                raise AnnotationError(f"line {lineno}: non-integer field in {line!r}") from None
            if w < 1 or h < 1:
                raise AnnotationError(f"line {lineno}: box extent must be >= 1, got w={w} h={h}")
            boxes.append(Rect(x, y, w, h))
        return boxes
    finally:
        if owned:
            stream.close()


def write_detections(boxes, sink) -> None:
    """Write one ``x y w h`` line per box, preserving input order."""
    stream, owned = _open_text(sink, "w")
    try:
        for box in boxes:
            stream.write(f"{box.x} {box.y} {box.w} {box.h}\n")
    finally:
        if owned:
            stream.close()
