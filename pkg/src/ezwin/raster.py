"""Framebuffers, the backend primitive contract and the reference rasterizer.

A port to another platform only has to provide an object satisfying
:class:`BackendPrimitives`; everything above it (windows, shapes, events)
is unchanged.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Protocol, Sequence

import numpy as np

from . import _kernels
from .color import Color
from .geometry import PixelRect, Scale, bbox_from_topleft, bbox_to_pixels


class Framebuffer:
    """Row-major RGB8 pixel grid, stored as a ``(height, width, 3)`` uint8 array."""

    __slots__ = ("pixels",)

    def __init__(self, width: int, height: int, fill: Color | tuple[int, int, int] = Color.Black):
        if width < 0 or height < 0:
            raise ValueError(f"negative framebuffer size {width}x{height}")
        self.pixels = np.empty((height, width, 3), dtype=np.uint8)
        self.pixels[...] = _rgb(fill)

    @classmethod
    def from_array(cls, arr: np.ndarray) -> Framebuffer:
        arr = np.asarray(arr)
        if arr.ndim != 3 or arr.shape[2] != 3:
            raise ValueError(f"expected (h, w, 3) array, got shape {arr.shape}")
        fb = cls.__new__(cls)
        fb.pixels = np.ascontiguousarray(arr, dtype=np.uint8).copy()
        return fb

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    def copy(self) -> Framebuffer:
        return Framebuffer.from_array(self.pixels)

    def tobytes(self) -> bytes:
        return self.pixels.tobytes()

    def count(self, color: Color | tuple[int, int, int]) -> int:
        """Number of pixels exactly equal to ``color``."""
        return int(np.all(self.pixels == np.array(_rgb(color), dtype=np.uint8), axis=2).sum())

    def __getitem__(self, ij):
        i, j = ij
        return tuple(int(c) for c in self.pixels[j, i])

    def __eq__(self, other):
        if not isinstance(other, Framebuffer):
            return NotImplemented
        return self.pixels.shape == other.pixels.shape and np.array_equal(self.pixels, other.pixels)

    def __repr__(self):
        return f"Framebuffer({self.width}x{self.height})"


@dataclass(frozen=True, eq=False)
class Image:
    """A decoded bitmap. ``pixels`` has shape ``(height, width, 3)``."""

    pixels: np.ndarray

    def __post_init__(self):
        p = np.ascontiguousarray(self.pixels, dtype=np.uint8)
        if p.ndim != 3 or p.shape[2] != 3:
            raise ValueError(f"expected (h, w, 3) pixel array, got {p.shape}")
        if p.shape[0] <= 0 or p.shape[1] <= 0:
            raise ValueError("image dimensions must be positive")
        p = p.copy()
        p.flags.writeable = False
        object.__setattr__(self, "pixels", p)

    @classmethod
    def from_bytes(cls, width: int, height: int, data: bytes) -> Image:
        if len(data) != width * height * 3:
            raise ValueError(f"expected {width * height * 3} bytes, got {len(data)}")
        return cls(np.frombuffer(data, dtype=np.uint8).reshape(height, width, 3))

    @property
    def width_px(self) -> int:
        return self.pixels.shape[1]

    @property
    def height_px(self) -> int:
        return self.pixels.shape[0]

    def __eq__(self, other):
        if not isinstance(other, Image):
            return NotImplemented
        return self.pixels.shape == other.pixels.shape and np.array_equal(self.pixels, other.pixels)


def _rgb(color) -> tuple[int, int, int]:
    return color.rgb if isinstance(color, Color) else tuple(color)


class BackendPrimitives(Protocol):
    """The complete set of low-level operations a platform port implements."""

    def clear(self, fb: Framebuffer, c: Color) -> None: ...

    def fill_rect(self, fb: Framebuffer, r: PixelRect, c: Color) -> None: ...

    def fill_ellipse(self, fb: Framebuffer, box: PixelRect, c: Color) -> None: ...

    def fill_triangle(self, fb: Framebuffer, v0: tuple[float, float], v1: tuple[float, float],
                      v2: tuple[float, float], c: Color) -> None: ...

    def blit(self, fb: Framebuffer, at: tuple[int, int], img: Image) -> None: ...


class SoftwareBackend:
    """Reference rasterizer. Pixel (i, j) is sampled at its centre (i+0.5, j+0.5)."""

    name = "software"

    def __init__(self, kernels: str | None = None):
        # kernels: None picks per EZWIN_DISABLE_NUMBA, else "numba" or "numpy"
        if kernels is None:
            self._ellipse, self._triangle = _kernels.fill_ellipse, _kernels.fill_triangle
            self.kernels = _kernels.BACKEND_NAME
        elif kernels == "numpy":
            self._ellipse, self._triangle = _kernels.fill_ellipse_np, _kernels.fill_triangle_np
            self.kernels = kernels
        elif kernels == "numba":
            if not _kernels.HAVE_NUMBA:
                raise RuntimeError("numba is not installed")
            self._ellipse, self._triangle = _kernels.fill_ellipse_jit, _kernels.fill_triangle_jit
            self.kernels = kernels
        else:
            raise ValueError(f"unknown kernel set {kernels!r}")

    def clear(self, fb, c):
        fb.pixels[...] = _rgb(c)

    def fill_rect(self, fb, r, c):
        x0, y0 = max(r.x, 0), max(r.y, 0)
        x1, y1 = min(r.x + r.width, fb.width), min(r.y + r.height, fb.height)
        if x0 < x1 and y0 < y1:
            fb.pixels[y0:y1, x0:x1] = _rgb(c)

    def fill_ellipse(self, fb, box, c):
        self._ellipse(fb.pixels, box.x, box.y, box.width, box.height, _rgb(c))

    def fill_triangle(self, fb, v0, v1, v2, c):
        self._triangle(fb.pixels, v0[0], v0[1], v1[0], v1[1], v2[0], v2[1], _rgb(c))

    def blit(self, fb, at, img):
        ax, ay = at
        h, w = img.pixels.shape[:2]
        x0, y0 = max(ax, 0), max(ay, 0)
        x1, y1 = min(ax + w, fb.width), min(ay + h, fb.height)
        if x0 < x1 and y0 < y1:
            fb.pixels[y0:y1, x0:x1] = img.pixels[y0 - ay:y1 - ay, x0 - ax:x1 - ax]


def blit_framebuffer(backend: BackendPrimitives, dst: Framebuffer, at: tuple[int, int],
                     src: Framebuffer) -> None:
    if src.width and src.height:
        backend.blit(dst, at, Image(src.pixels))


@dataclass
class VirtualScreen:
    """The desktop: a pixel size plus the windows stacked on it, bottom first."""

    width_px: int = 800
    height_px: int = 600
    windows: Sequence = field(default_factory=list)

    def __post_init__(self):
        if self.width_px <= 0 or self.height_px <= 0:
            raise ValueError("screen dimensions must be positive")


SCREEN_BACKGROUND = Color.Black


def compose(screen: VirtualScreen, scale: Scale, backend: BackendPrimitives | None = None) -> Framebuffer:
    """Paint every open window onto a fresh black screen, lowest z first."""
    backend = backend or SoftwareBackend()
    out = Framebuffer(screen.width_px, screen.height_px, SCREEN_BACKGROUND)
    for win in sorted(screen.windows, key=lambda w: w.z_index):
        if not win.open:
            continue
        rect = bbox_to_pixels(bbox_from_topleft(win.screen_pos, win.size), scale)
        blit_framebuffer(backend, out, (rect.x, rect.y), win.surface)
    return out
