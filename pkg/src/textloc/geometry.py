"""Axis-aligned pixel rectangles shared by the detection and evaluation code."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class Rect:
    """Rectangle with integer top-left corner (x, y) and extent (w, h) >= 1.

    A rect covers the half-open pixel range [x, x + w) x [y, y + h).
    """

    x: int
    y: int
    w: int
    h: int

    def __post_init__(self):
        if self.w < 1 or self.h < 1:
            raise ValueError(f"rect extent must be >= 1, got w={self.w} h={self.h}")

    @property
    def area(self) -> int:
        return self.w * self.h

    @property
    def x2(self) -> int:
        """One past the rightmost covered column."""
        return self.x + self.w

    @property
    def y2(self) -> int:
        """One past the bottommost covered row."""
        return self.y + self.h

    def contains(self, other: "Rect") -> bool:
        return (
            self.x <= other.x
            and self.y <= other.y
            and other.x2 <= self.x2
            and other.y2 <= self.y2
        )


def intersection_area(a: Rect, b: Rect) -> int:
    """Number of pixels covered by both rectangles."""
    dx = min(a.x2, b.x2) - max(a.x, b.x)
    dy = min(a.y2, b.y2) - max(a.y, b.y)
    if dx <= 0 or dy <= 0:
        return 0
    return dx * dy


def bounding_union(a: Rect, b: Rect) -> Rect:
    """Smallest rectangle enclosing both inputs."""
    x = min(a.x, b.x)
    y = min(a.y, b.y)
    return Rect(x, y, max(a.x2, b.x2) - x, max(a.y2, b.y2) - y)
