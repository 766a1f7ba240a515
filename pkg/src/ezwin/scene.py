"""Windows, shapes and bitmaps, independent of any rendering backend.

Shapes are anchored at their centre, bitmaps at their upper-left corner.
Both use window-local centimetres. Nothing is rendered until ``draw_*`` is
called, and erasing simply paints the window background over the footprint.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .color import Color
from .errors import (ClosedWindow, InvalidPosition, InvalidSize, UnknownBitmap,
                     UnknownShape, UnknownWindow)
from .geometry import (BBox, Coord2D, Extent2D, PixelRect, Scale, as_scale,
                       bbox_contains, bbox_from_center, bbox_from_topleft,
                       bbox_to_pixels, cm_to_px)
from .raster import BackendPrimitives, Framebuffer, Image, SoftwareBackend, VirtualScreen, compose

SQRT3 = math.sqrt(3.0)


class ShapeKind(enum.Enum):
    Rectangle = "rect"
    Ellipse = "ellipse"
    Triangle = "triangle"


@dataclass(eq=False)
class WindowState:
    id: int
    title: str
    screen_pos: Coord2D
    size: Extent2D
    surface: Framebuffer
    z_index: int
    background: Color = Color.White
    open: bool = True

    @property
    def screen_bbox(self) -> BBox:
        return bbox_from_topleft(self.screen_pos, self.size)


@dataclass(eq=False)
class Shape:
    id: int
    window: int
    kind: ShapeKind
    center: Coord2D
    extent: Extent2D
    color: Color

    @property
    def effective_extent(self) -> Extent2D:
        """Size of the bounding box; a triangle's width is its side length."""
        if self.kind is ShapeKind.Triangle:
            side = self.extent.width
            return Extent2D(side, side * SQRT3 / 2)
        return self.extent


@dataclass(eq=False)
class BitmapSprite:
    id: int
    window: int
    image: Image
    topleft: Coord2D


def triangle_vertices(center: Coord2D, side: float) -> tuple[Coord2D, Coord2D, Coord2D]:
    """Equilateral triangle, apex up, with its centroid at ``center``."""
    cx, cy = center.x, center.y
    up = side / SQRT3
    down = side / (2 * SQRT3)
    return (Coord2D(cx, cy - up),
            Coord2D(cx - side / 2, cy + down),
            Coord2D(cx + side / 2, cy + down))


def shape_bbox(shape: Shape) -> BBox:
    if shape.kind is ShapeKind.Triangle:
        v = triangle_vertices(shape.center, shape.extent.width)
        return BBox(Coord2D(v[1].x, v[0].y), Coord2D(v[2].x, v[1].y))
    return bbox_from_center(shape.center, shape.extent)


class Scene:
    """Registry of windows, shapes and bitmaps sharing one scale and backend.

    Handles are plain ints, allocated in creation order across all object
    kinds, so creation order is comparable between windows.
    """

    def __init__(self, scale: Scale | float | None = None, backend: BackendPrimitives | None = None,
                 screen_px: tuple[int, int] = (800, 600)):
        self.scale = as_scale(scale)
        self.backend = backend if backend is not None else SoftwareBackend()
        self.screen_px = screen_px
        self.windows: dict[int, WindowState] = {}
        self.shapes: dict[int, Shape] = {}
        self.bitmaps: dict[int, BitmapSprite] = {}
        self._next_id = 1
        self._next_z = 0

    def _new_id(self) -> int:
        i = self._next_id
        self._next_id += 1
        return i

    # -- windows ---------------------------------------------------------

    def open_window(self, title: str, screen_pos: Coord2D, size: Extent2D) -> int:
        if not (size.width > 0 and size.height > 0):
            raise InvalidSize(f"window size must be positive, got {size.width}x{size.height}")
        if screen_pos.x < 0 or screen_pos.y < 0:
            raise InvalidPosition(f"window position must be non-negative, got ({screen_pos.x}, {screen_pos.y})")
        rect = bbox_to_pixels(bbox_from_topleft(screen_pos, size), self.scale)
        surface = Framebuffer(rect.width, rect.height, Color.White)
        wid = self._new_id()
        self.windows[wid] = WindowState(wid, title, screen_pos, size, surface, self._next_z)
        self._next_z += 1
        return wid

    def window(self, w: int) -> WindowState:
        win = self.windows.get(w)
        if win is None or not win.open:
            raise UnknownWindow(f"unknown or closed window {w!r}")
        return win

    def close_window(self, w: int) -> None:
        self.window(w).open = False

    def open_windows(self) -> list[WindowState]:
        """Open windows, bottom of the stack first."""
        return sorted((w for w in self.windows.values() if w.open), key=lambda w: w.z_index)

    def window_at(self, p: Coord2D) -> WindowState | None:
        """Topmost open window containing screen point ``p``."""
        for win in reversed(self.open_windows()):
            # tested in local coordinates so the translated point is always
            # inside [0, width) x [0, height), even after float rounding
            local = BBox(Coord2D(0.0, 0.0), Coord2D(win.size.width, win.size.height))
            if bbox_contains(local, p - win.screen_pos):
                return win
        return None

    def virtual_screen(self) -> VirtualScreen:
        return VirtualScreen(self.screen_px[0], self.screen_px[1], self.open_windows())

    def compose(self) -> Framebuffer:
        return compose(self.virtual_screen(), self.scale, self.backend)

    # -- shapes ----------------------------------------------------------

    def create_shape(self, w: int, kind: ShapeKind, center: Coord2D, extent: Extent2D,
                     color: Color) -> int:
        self.window(w)
        sid = self._new_id()
        self.shapes[sid] = Shape(sid, w, ShapeKind(kind), center, extent, color)
        return sid

    def shape(self, s: int) -> Shape:
        try:
            return self.shapes[s]
        except KeyError:
            raise UnknownShape(f"unknown shape {s!r}") from None

    def _live_window(self, w: int) -> WindowState:
        win = self.windows[w]
        if not win.open:
            raise ClosedWindow(f"window {w} has been closed")
        return win

    def shape_pixels(self, s: int) -> PixelRect:
        """Pixel rectangle of the shape's bounding box."""
        return bbox_to_pixels(shape_bbox(self.shape(s)), self.scale)

    def _stamp_shape(self, shape: Shape, color: Color) -> None:
        win = self._live_window(shape.window)
        fb, be, scale = win.surface, self.backend, self.scale
        if shape.kind is ShapeKind.Rectangle:
            be.fill_rect(fb, bbox_to_pixels(shape_bbox(shape), scale), color)
        elif shape.kind is ShapeKind.Ellipse:
            be.fill_ellipse(fb, bbox_to_pixels(shape_bbox(shape), scale), color)
        else:
            s = scale.pixels_per_cm
            v0, v1, v2 = ((v.x * s, v.y * s) for v in triangle_vertices(shape.center, shape.extent.width))
            be.fill_triangle(fb, v0, v1, v2, color)

    def draw_shape(self, s: int) -> None:
        shape = self.shape(s)
        self._stamp_shape(shape, shape.color)

    def erase_shape(self, s: int) -> None:
        shape = self.shape(s)
        self._stamp_shape(shape, self._live_window(shape.window).background)

    def set_shape_position(self, s: int, center: Coord2D) -> None:
        self.shape(s).center = center

    def get_shape_position(self, s: int) -> Coord2D:
        return self.shape(s).center

    def set_shape_size(self, s: int, ext: Extent2D) -> None:
        self.shape(s).extent = ext

    def set_shape_color(self, s: int, c: Color) -> None:
        self.shape(s).color = Color(c)

    # -- bitmaps ---------------------------------------------------------

    def create_bitmap(self, w: int, img: Image, topleft: Coord2D) -> int:
        self.window(w)
        bid = self._new_id()
        self.bitmaps[bid] = BitmapSprite(bid, w, img, topleft)
        return bid

    def bitmap(self, b: int) -> BitmapSprite:
        try:
            return self.bitmaps[b]
        except KeyError:
            raise UnknownBitmap(f"unknown bitmap {b!r}") from None

    def bitmap_pixels(self, b: int) -> PixelRect:
        bm = self.bitmap(b)
        return PixelRect(cm_to_px(bm.topleft.x, self.scale), cm_to_px(bm.topleft.y, self.scale),
                         bm.image.width_px, bm.image.height_px)

    def draw_bitmap(self, b: int) -> None:
        bm = self.bitmap(b)
        win = self._live_window(bm.window)
        r = self.bitmap_pixels(b)
        self.backend.blit(win.surface, (r.x, r.y), bm.image)

    def erase_bitmap(self, b: int) -> None:
        bm = self.bitmap(b)
        win = self._live_window(bm.window)
        self.backend.fill_rect(win.surface, self.bitmap_pixels(b), win.background)

    def set_bitmap_position(self, b: int, topleft: Coord2D) -> None:
        self.bitmap(b).topleft = topleft

    def get_bitmap_position(self, b: int) -> Coord2D:
        return self.bitmap(b).topleft
