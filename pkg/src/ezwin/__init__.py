"""ezwin: a small centimetre-based 2D graphics and event library for teaching.

Windows, shapes and bitmaps live in :mod:`ezwin.scene`, pixels are produced
by a pluggable backend (:mod:`ezwin.raster`), and :mod:`ezwin.runtime` runs
the UserStart / event / UserEnd lifecycle over a simulated clock.
"""
from .color import Color
from .errors import (ClosedWindow, EzWinError, ImageNotFound, InvalidPosition, InvalidSize,
                     MalformedImage, ParseError, TimerError, UnknownBitmap, UnknownShape,
                     UnknownWindow)
from .geometry import (BBox, Coord2D, Extent2D, PixelRect, Scale, bbox_contains,
                       bbox_from_center, bbox_from_topleft, bbox_to_pixels, cm_to_px)
from .ppm import load_image, read_ppm, write_ppm
from .raster import BackendPrimitives, Framebuffer, Image, SoftwareBackend, VirtualScreen, compose
from .runtime import (Advance, EventQueue, MouseClick, Quit, Runtime, SimClock, TimerTick,
                      UserEnd, UserStart, run_app)
from .scene import Scene, ShapeKind

__version__ = "0.1.0"
