"""Live display backed by matplotlib.

The screen is still rasterized by the reference :class:`SoftwareBackend` and
the composed framebuffer is shown in a figure, so what appears on screen is
exactly what :func:`ezwin.raster.compose` produces. Mouse presses and the
window-manager close button become the same :class:`MouseClick` and
:class:`Quit` events a trace file produces.

matplotlib is imported lazily; the rest of the package does not need it.
"""
from __future__ import annotations

import math
import queue
import time
from typing import Callable

from .errors import EzWinError
from .geometry import Coord2D, Scale
from .raster import Framebuffer
from .runtime import Advance, MouseClick, Quit, Runtime
from .scene import Scene


class SessionLost(EzWinError):
    """The native window is gone."""


def pixel_to_screen_cm(px: float, py: float, scale: Scale) -> Coord2D:
    """Map an OS pixel position to screen centimetres."""
    return Coord2D(px / scale.pixels_per_cm, py / scale.pixels_per_cm)


class NativeSession:
    def __init__(self, scene: Scene, title: str = "ezwin"):
        self.scene = scene
        self.title = title
        self.presented: Framebuffer | None = None
        self._events: queue.SimpleQueue = queue.SimpleQueue()
        self._fig = None
        self._image = None
        self._lost = False

    def open(self) -> NativeSession:
        import matplotlib.pyplot as plt

        w, h = self.scene.screen_px
        dpi = 100
        fig = plt.figure(figsize=(w / dpi, h / dpi), dpi=dpi)
        try:
            fig.canvas.manager.set_window_title(self.title)
        except AttributeError:
            pass
        ax = fig.add_axes((0, 0, 1, 1))
        ax.set_axis_off()
        fb = self.scene.compose()
        self._image = ax.imshow(fb.pixels, interpolation="nearest")
        fig.canvas.mpl_connect("button_press_event", self._on_click)
        fig.canvas.mpl_connect("close_event", self._on_close)
        self._fig = fig
        self.presented = fb
        plt.show(block=False)
        return self

    def close(self) -> None:
        if self._fig is not None:
            import matplotlib.pyplot as plt

            plt.close(self._fig)
            self._fig = None

    def __enter__(self):
        return self.open()

    def __exit__(self, *exc):
        self.close()

    # OS thread side: only ever touches the queue
    def _on_click(self, event) -> None:
        if event.xdata is None or event.ydata is None:
            return
        # imshow puts pixel i's centre at data coordinate i
        px, py = math.floor(event.xdata + 0.5), math.floor(event.ydata + 0.5)
        self._events.put(MouseClick(pixel_to_screen_cm(px, py, self.scene.scale)))

    def _on_close(self, event) -> None:
        self._lost = True
        self._events.put(Quit())

    def _check(self) -> None:
        if self._fig is None:
            raise SessionLost("native session is not open")

    def present(self) -> None:
        self._check()
        if self._lost:
            raise SessionLost("native window was closed")
        fb = self.scene.compose()
        self._image.set_data(fb.pixels)
        self._fig.canvas.draw_idle()
        self.presented = fb

    def poll_native_events(self) -> list:
        self._check()
        try:
            self._fig.canvas.flush_events()
        except NotImplementedError:
            pass
        out = []
        while True:
            try:
                out.append(self._events.get_nowait())
            except queue.Empty:
                return out


def native_source(session: NativeSession, clock: Callable[[], float] = time.monotonic,
                  period: float = 1 / 60):
    """Event source for :meth:`Runtime.run`: presents, polls and advances wall-clock time."""
    start = clock()
    emitted = 0  # whole milliseconds already handed to the runtime
    while True:
        session.present()
        events = session.poll_native_events()
        for ev in events:
            yield ev
            if isinstance(ev, Quit):
                return
        total = int((clock() - start) * 1000)
        if total > emitted:
            yield Advance(total - emitted)
            emitted = total
        time.sleep(period)


def run_native(api_main, runtime: Runtime | None = None, title: str = "ezwin") -> int:
    """Run an application in a live window until it is closed."""
    runtime = runtime or Runtime()
    session = NativeSession(runtime.scene, title)
    try:
        session.open()
        return runtime.run(api_main, native_source(session))
    finally:
        session.close()
