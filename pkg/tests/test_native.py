"""The matplotlib session, driven headlessly through the Agg canvas."""

import numpy as np
import pytest

mpl = pytest.importorskip("matplotlib")
mpl.use("Agg")

from matplotlib.backend_bases import CloseEvent, MouseEvent  # noqa: E402

from ezwin import Color, Coord2D, Extent2D, MouseClick, Quit, Runtime, Scene, ShapeKind  # noqa: E402
from ezwin.native import NativeSession, SessionLost, native_source, pixel_to_screen_cm  # noqa: E402
from ezwin.ppm import encode_ppm  # noqa: E402


@pytest.fixture
def session():
    scene = Scene(38.0, screen_px=(400, 300))
    s = NativeSession(scene).open()
    yield s
    s.close()


def press(session, px, py):
    canvas = session._fig.canvas
    # figure pixel y runs bottom-up
    ev = MouseEvent("button_press_event", canvas, px + 0.5, session.scene.screen_px[1] - py - 0.5, button=1)
    canvas.callbacks.process("button_press_event", ev)


def test_inverse_scale():
    assert pixel_to_screen_cm(152, 190, session_scale := Scene(38.0).scale) == Coord2D(4.0, 5.0)
    assert pixel_to_screen_cm(0, 0, session_scale) == Coord2D(0, 0)


def test_no_pending_input(session):
    assert session.poll_native_events() == []


def test_click_maps_to_screen_cm(session):
    press(session, 152, 190)
    assert session.poll_native_events() == [MouseClick(Coord2D(4.0, 5.0))]


def test_close_button_is_quit(session):
    canvas = session._fig.canvas
    canvas.callbacks.process("close_event", CloseEvent("close_event", canvas))
    assert session.poll_native_events() == [Quit()]
    with pytest.raises(SessionLost):
        session.present()


def test_present_matches_compose(session):
    scene = session.scene
    w = scene.open_window("w", Coord2D(1, 1), Extent2D(4, 3))
    s = scene.create_shape(w, ShapeKind.Ellipse, Coord2D(2, 1.5), Extent2D(3, 2), Color.Magenta)
    scene.draw_shape(s)
    session.present()
    assert encode_ppm(session.presented) == encode_ppm(scene.compose())
    assert np.array_equal(np.asarray(session._image.get_array()), scene.compose().pixels)
    scene.close_window(w)
    session.present()
    assert session.presented.count(Color.Black) == 400 * 300


def test_empty_screen_is_black(session):
    session.present()
    assert session.presented.count(Color.Black) == 400 * 300


def test_present_before_open():
    with pytest.raises(SessionLost):
        NativeSession(Scene()).present()


def test_source_equivalence(session):
    """Native clicks replayed through the runtime match the same clicks from a trace."""
    def app(rt, hits):
        def main():
            w = rt.scene.open_window("w", Coord2D(1, 1), Extent2D(6, 5))
            rt.set_mouse_clicked_callback(w, hits.append)
        return main

    press(session, 152, 190)
    press(session, 5, 5)
    native = session.poll_native_events() + [Quit()]

    rt1, hits1 = Runtime(Scene(38.0)), []
    rt1.run(app(rt1, hits1), native)
    rt2, hits2 = Runtime(Scene(38.0)), []
    rt2.run(app(rt2, hits2), [MouseClick(Coord2D(4, 5)), MouseClick(Coord2D(5 / 38, 5 / 38)), Quit()])
    assert rt1.dispatch_log == rt2.dispatch_log and hits1 == hits2 == [Coord2D(3, 4)]


def test_native_source_advances_wall_clock(session):
    times = iter([0.0, 0.05, 0.12])
    src = native_source(session, clock=lambda: next(times), period=0)
    first = next(src)
    assert first.dt == 50
    press(session, 152, 190)
    assert next(src) == MouseClick(Coord2D(4, 5))
    assert next(src).dt == 70
