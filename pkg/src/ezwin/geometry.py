"""Centimeter-space geometry and the cm -> pixel mapping.

All positions and sizes in the public API are centimeters. Origin is the
upper-left corner, x grows to the right and y grows downward. Pixels only
appear once a :class:`Scale` is applied.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

DEFAULT_PIXELS_PER_CM = 38.0


def _check_finite(*values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"coordinate must be finite, got {v!r}")


@dataclass(frozen=True, slots=True)
class Coord2D:
    x: float
    y: float

    def __post_init__(self):
        _check_finite(self.x, self.y)

    def __add__(self, other: Coord2D) -> Coord2D:
        return Coord2D(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Coord2D) -> Coord2D:
        return Coord2D(self.x - other.x, self.y - other.y)


@dataclass(frozen=True, slots=True)
class Extent2D:
    width: float
    height: float

    def __post_init__(self):
        _check_finite(self.width, self.height)
        if self.width < 0 or self.height < 0:
            raise ValueError(f"extent must be non-negative, got {self.width}x{self.height}")


@dataclass(frozen=True, slots=True)
class BBox:
    min: Coord2D
    max: Coord2D

    def __post_init__(self):
        if self.min.x > self.max.x or self.min.y > self.max.y:
            raise ValueError(f"inverted box {self.min} .. {self.max}")

    @property
    def center(self) -> Coord2D:
        return Coord2D((self.min.x + self.max.x) / 2, (self.min.y + self.max.y) / 2)

    @property
    def extent(self) -> Extent2D:
        return Extent2D(self.max.x - self.min.x, self.max.y - self.min.y)


@dataclass(frozen=True, slots=True)
class Scale:
    pixels_per_cm: float = DEFAULT_PIXELS_PER_CM

    def __post_init__(self):
        if not (math.isfinite(self.pixels_per_cm) and self.pixels_per_cm > 0):
            raise ValueError(f"scale must be finite and positive, got {self.pixels_per_cm!r}")


@dataclass(frozen=True, slots=True)
class PixelRect:
    x: int
    y: int
    width: int
    height: int

    def __post_init__(self):
        if self.width < 0 or self.height < 0:
            raise ValueError(f"negative pixel rect size {self.width}x{self.height}")

    @property
    def area(self) -> int:
        return self.width * self.height


def as_scale(scale: Scale | float | None) -> Scale:
    if scale is None:
        return Scale()
    if isinstance(scale, Scale):
        return scale
    return Scale(float(scale))


def cm_to_px(v: float, scale: Scale) -> int:
    """Round ``v`` cm to the nearest pixel, halves rounding toward +inf."""
    return math.floor(v * scale.pixels_per_cm + 0.5)


def px_to_cm(p: float, scale: Scale) -> float:
    return p / scale.pixels_per_cm


def bbox_from_center(center: Coord2D, ext: Extent2D) -> BBox:
    hw, hh = ext.width / 2, ext.height / 2
    return BBox(Coord2D(center.x - hw, center.y - hh), Coord2D(center.x + hw, center.y + hh))


def bbox_from_topleft(origin: Coord2D, ext: Extent2D) -> BBox:
    return BBox(origin, Coord2D(origin.x + ext.width, origin.y + ext.height))


def bbox_contains(b: BBox, p: Coord2D) -> bool:
    # half-open: the max edges belong to the neighbour
    return b.min.x <= p.x < b.max.x and b.min.y <= p.y < b.max.y


def bbox_to_pixels(b: BBox, scale: Scale) -> PixelRect:
    # Convert corners, then subtract, so abutting boxes tile with no gap or overlap.
    x0, y0 = cm_to_px(b.min.x, scale), cm_to_px(b.min.y, scale)
    x1, y1 = cm_to_px(b.max.x, scale), cm_to_px(b.max.y, scale)
    return PixelRect(x0, y0, x1 - x0, y1 - y0)
