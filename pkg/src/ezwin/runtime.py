"""The event loop: lifecycle messages, mouse clicks and interval timers.

A run starts by calling the client's ``api_main`` (the UserStart message),
then pulls events from a source and dispatches each one to completion. When
the source is exhausted or yields :class:`Quit`, UserEnd is delivered to the
registered end callback or to the default handler.

Time comes from an injected :class:`SimClock`; timers fire only when the
clock is advanced, which keeps every run reproducible.
"""
from __future__ import annotations

import logging
import queue
from dataclasses import dataclass
from typing import Callable, Iterable, Union

from .errors import TimerError
from .geometry import Coord2D
from .scene import Scene

log = logging.getLogger(__name__)

EXIT_FAILURE = 1


# -- events --------------------------------------------------------------

@dataclass(frozen=True)
class UserStart:
    pass


@dataclass(frozen=True)
class MouseClick:
    screen_pos: Coord2D


@dataclass(frozen=True)
class TimerTick:
    window: int
    due: int


@dataclass(frozen=True)
class Quit:
    pass


@dataclass(frozen=True)
class UserEnd:
    pass


@dataclass(frozen=True)
class Advance:
    """Source directive: move the clock forward ``dt`` ms, firing due timers."""

    dt: int


Event = Union[UserStart, MouseClick, TimerTick, Quit, UserEnd]


@dataclass(frozen=True)
class Dispatch:
    """One line of the dispatch log."""

    time: int
    event: Event
    target: int | None = None  # window that handled it, if any


class SimClock:
    def __init__(self, now: int = 0):
        if now < 0:
            raise ValueError("clock cannot start before 0")
        self.now = now

    def set(self, t: int) -> None:
        if t < self.now:
            raise ValueError(f"clock cannot go backwards ({self.now} -> {t})")
        self.now = t


@dataclass
class TimerState:
    interval: int | None = None
    running: bool = False
    next_due: int | None = None


class EventQueue:
    """Thread-safe event source. Producers ``post``; the loop thread iterates.

    Iteration blocks for the next event and stops after :meth:`close`.
    """

    _CLOSED = object()

    def __init__(self):
        self._q = queue.SimpleQueue()

    def post(self, item) -> None:
        self._q.put(item)

    def close(self) -> None:
        self._q.put(self._CLOSED)

    def __iter__(self):
        while True:
            item = self._q.get()
            if item is self._CLOSED:
                return
            yield item


class Runtime:
    """Single-threaded dispatcher owning a scene, a clock and all callbacks."""

    def __init__(self, scene: Scene | None = None, clock: SimClock | None = None):
        self.scene = scene if scene is not None else Scene()
        self.clock = clock if clock is not None else SimClock()
        self.mouse_callbacks: dict[int, Callable[[Coord2D], object]] = {}
        self.timer_callbacks: dict[int, Callable[[], object]] = {}
        self.timers: dict[int, TimerState] = {}
        self.end_callback: Callable[[], object] | None = None
        self.dispatch_log: list[Dispatch] = []
        self.error: BaseException | None = None

    # -- registration ----------------------------------------------------

    def _open(self, w: int) -> None:
        self.scene.window(w)

    def set_mouse_clicked_callback(self, w: int, cb: Callable[[Coord2D], object]) -> None:
        self._open(w)
        self.mouse_callbacks[w] = cb

    def set_timer_callback(self, w: int, cb: Callable[[], object]) -> None:
        self._open(w)
        self.timer_callbacks[w] = cb

    def set_end_callback(self, cb: Callable[[], object] | None) -> None:
        self.end_callback = cb

    def set_timer_interval(self, w: int, interval: int) -> None:
        self._open(w)
        if int(interval) != interval or interval <= 0:
            raise ValueError(f"timer interval must be a positive integer, got {interval!r}")
        t = self.timers.setdefault(w, TimerState())
        t.interval = int(interval)
        if t.running:
            t.next_due = self.clock.now + t.interval

    def start_timer(self, w: int) -> None:
        self._open(w)
        t = self.timers.setdefault(w, TimerState())
        if t.interval is None:
            raise TimerError(f"window {w}: set a timer interval before starting the timer")
        t.running = True
        t.next_due = self.clock.now + t.interval

    def stop_timer(self, w: int) -> None:
        self._open(w)
        t = self.timers.get(w)
        if t is not None:
            t.running = False
            t.next_due = None

    def close_window(self, w: int) -> None:
        self.scene.close_window(w)
        self.mouse_callbacks.pop(w, None)
        self.timer_callbacks.pop(w, None)
        self.timers.pop(w, None)

    # -- dispatch ----------------------------------------------------------

    def _record(self, event, target=None) -> None:
        self.dispatch_log.append(Dispatch(self.clock.now, event, target))

    def dispatch_click(self, p: Coord2D) -> None:
        win = self.scene.window_at(p)
        self._record(MouseClick(p), win.id if win else None)
        if win is None:
            return
        cb = self.mouse_callbacks.get(win.id)
        if cb is not None:
            cb(p - win.screen_pos)

    def _next_fire(self, until: int):
        best = None
        for w, t in self.timers.items():
            if not t.running or t.next_due > until:
                continue
            if not self.scene.windows[w].open:
                continue
            key = (t.next_due, w)
            if best is None or key < best:
                best = key
        return best

    def advance_clock(self, dt: int) -> None:
        if dt < 0:
            raise ValueError(f"cannot advance the clock by a negative amount ({dt})")
        target = self.clock.now + int(dt)
        while (fire := self._next_fire(target)) is not None:
            due, w = fire
            self.clock.set(due)
            t = self.timers[w]
            t.next_due = due + t.interval
            self._record(TimerTick(w, due), w)
            cb = self.timer_callbacks.get(w)
            if cb is not None:
                cb()
        self.clock.set(target)

    def _dispatch(self, item) -> bool:
        """Handle one source item; return False to stop the loop."""
        if isinstance(item, Quit):
            return False
        if isinstance(item, MouseClick):
            self.dispatch_click(item.screen_pos)
        elif isinstance(item, Advance):
            self.advance_clock(item.dt)
        elif isinstance(item, TimerTick):
            raise TypeError("timer ticks are generated by the clock, not fed from a source")
        else:
            raise TypeError(f"unexpected event source item {item!r}")
        return True

    def _default_end(self) -> None:
        log.debug("UserEnd: default handler, %d windows left open", len(self.scene.open_windows()))

    def run(self, api_main: Callable[[], int | None], source: Iterable = ()) -> int:
        """Run one application lifecycle and return its exit code."""
        self.error = None
        code = EXIT_FAILURE
        self._record(UserStart())
        try:
            rc = api_main()
            code = 0 if rc is None else int(rc)
            for item in source:
                if not self._dispatch(item):
                    break
        except Exception as exc:
            log.error("callback raised, stopping the event loop: %r", exc)
            self.error = exc
            code = EXIT_FAILURE
        self._record(UserEnd())
        try:
            (self.end_callback or self._default_end)()
        except Exception as exc:
            log.error("UserEnd handler raised: %r", exc)
            self.error = self.error or exc
            code = EXIT_FAILURE
        return code


def run_app(api_main: Callable[[], int | None], source: Iterable = (), runtime: Runtime | None = None) -> int:
    """Convenience wrapper: run ``api_main`` on ``runtime`` (a fresh one by default)."""
    return (runtime or Runtime()).run(api_main, source)
