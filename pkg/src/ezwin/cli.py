"""Command-line harness: run a scene script and an event trace deterministically.

Exit status is 0 on success, 1 for usage, parse and scene errors, and 2 for
I/O failures (unreadable inputs, missing or malformed bitmaps, unwritable
outputs).
"""
from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import dsl
from .errors import EzWinError, ImageNotFound, MalformedImage, ParseError
from .geometry import DEFAULT_PIXELS_PER_CM, Scale
from .ppm import load_image, write_ppm
from .runtime import Advance, Dispatch, MouseClick, Quit, Runtime, TimerTick
from .scene import Scene, ShapeKind

log = logging.getLogger(__name__)

EXIT_OK, EXIT_ERROR, EXIT_IO = 0, 1, 2

_KINDS = {"rect": ShapeKind.Rectangle, "ellipse": ShapeKind.Ellipse, "triangle": ShapeKind.Triangle}


@dataclass
class RunConfig:
    scale: float = DEFAULT_PIXELS_PER_CM
    screen_px: tuple[int, int] = (800, 600)
    out_dir: Path = field(default_factory=lambda: Path("."))
    compose_final: bool = False
    log_path: Path | None = None

    def __post_init__(self):
        Scale(self.scale)
        if self.screen_px[0] <= 0 or self.screen_px[1] <= 0:
            raise ValueError("screen dimensions must be positive")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _screen(text: str) -> tuple[int, int]:
    try:
        w, h = (int(v) for v in text.lower().split("x"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected WxH in pixels, got {text!r}") from None
    if w <= 0 or h <= 0:
        raise argparse.ArgumentTypeError("screen dimensions must be positive")
    return w, h


def _scale(text: str) -> float:
    try:
        return Scale(float(text)).pixels_per_cm
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ezwin", description="Render a scene script and replay an event trace.")
    p.add_argument("--scene", required=True, type=Path, help="scene script")
    p.add_argument("--trace", type=Path, help="event trace to replay after the scene")
    p.add_argument("--scale", type=_scale, default=DEFAULT_PIXELS_PER_CM, help="pixels per cm (default 38)")
    p.add_argument("--screen", type=_screen, default=(800, 600), help="screen size in pixels, WxH")
    p.add_argument("--out-dir", type=Path, default=Path("."), help="directory for snapshots and logs")
    p.add_argument("--compose-final", action="store_true",
                   help="write the composed screen to OUT_DIR/final.ppm at exit")
    p.add_argument("--log", type=Path, dest="log_path",
                   help="dispatch log path (default OUT_DIR/dispatch.log)")
    return p


def format_dispatch(entry: Dispatch, names: dict[int, str]) -> str:
    ev = entry.event
    who = names.get(entry.target, "-") if entry.target is not None else "-"
    if isinstance(ev, MouseClick):
        body = f"MouseClick {ev.screen_pos.x!r} {ev.screen_pos.y!r} -> {who}"
    elif isinstance(ev, TimerTick):
        body = f"TimerTick {who} due={ev.due}"
    else:
        body = type(ev).__name__
    return f"{entry.time} {body}"


class SceneError(EzWinError):
    """A scene command failed while executing."""

    def __init__(self, line: int, cause: Exception):
        super().__init__(f"line {line}: {cause}")
        self.line = line
        self.cause = cause


class SceneRunner:
    """Executes parsed scene commands against a :class:`Runtime`."""

    def __init__(self, runtime: Runtime, commands, images, config: RunConfig):
        self.rt = runtime
        self.commands = commands
        self.images = images
        self.config = config
        self.handles: dict[str, int] = {}
        self.kinds: dict[str, str] = {}

    @property
    def names(self) -> dict[int, str]:
        return {h: n for n, h in self.handles.items()}

    def __call__(self) -> int:
        for cmd in self.commands:
            try:
                self.execute(cmd)
            except (EzWinError, OSError) as exc:
                raise SceneError(cmd.line, exc) from exc
        return EXIT_OK

    def execute(self, cmd) -> None:
        scene = self.rt.scene
        if isinstance(cmd, dsl.WindowCmd):
            self._bind(cmd.name, "window", scene.open_window(cmd.title, cmd.pos, cmd.size))
        elif isinstance(cmd, dsl.ShapeCmd):
            h = scene.create_shape(self.handles[cmd.window], _KINDS[cmd.kind], cmd.center, cmd.extent, cmd.color)
            self._bind(cmd.name, "shape", h)
        elif isinstance(cmd, dsl.BitmapCmd):
            h = scene.create_bitmap(self.handles[cmd.window], self.images[cmd.line], cmd.topleft)
            self._bind(cmd.name, "bitmap", h)
        elif isinstance(cmd, dsl.DrawCmd):
            h = self.handles[cmd.name]
            scene.draw_shape(h) if self.kinds[cmd.name] == "shape" else scene.draw_bitmap(h)
        elif isinstance(cmd, dsl.EraseCmd):
            h = self.handles[cmd.name]
            scene.erase_shape(h) if self.kinds[cmd.name] == "shape" else scene.erase_bitmap(h)
        elif isinstance(cmd, dsl.SetPosCmd):
            h = self.handles[cmd.name]
            if self.kinds[cmd.name] == "shape":
                scene.set_shape_position(h, cmd.pos)
            else:
                scene.set_bitmap_position(h, cmd.pos)
        elif isinstance(cmd, dsl.SetColorCmd):
            scene.set_shape_color(self.handles[cmd.name], cmd.color)
        elif isinstance(cmd, dsl.SnapshotCmd):
            self.snapshot(cmd)
        elif isinstance(cmd, dsl.CloseCmd):
            self.rt.close_window(self.handles[cmd.window])
        else:  # pragma: no cover
            raise TypeError(cmd)

    def _bind(self, name, kind, handle):
        self.handles[name] = handle
        self.kinds[name] = kind

    def snapshot(self, cmd: dsl.SnapshotCmd) -> None:
        scene = self.rt.scene
        if cmd.target == dsl.SCREEN_TARGET:
            fb = scene.compose()
        elif cmd.target is not None:
            fb = scene.window(self.handles[cmd.target]).surface
        else:
            wins = scene.open_windows()
            if not wins:
                raise EzWinError("snapshot with no open window")
            fb = wins[-1].surface
        write_ppm(fb, self.config.out_dir / cmd.path)


def _read_text(path: Path) -> str:
    with open(path, encoding="utf-8") as f:
        return f.read()


def _trace_source(commands):
    for cmd in commands:
        if isinstance(cmd, dsl.ClickCmd):
            yield MouseClick(cmd.pos)
        elif isinstance(cmd, dsl.AdvanceCmd):
            yield Advance(cmd.ms)
        else:
            yield Quit()


def run(scene_path: Path, trace_path: Path | None, config: RunConfig, err=None) -> int:
    """Parse, render and replay. Returns a process exit status."""
    err = err or sys.stderr
    try:
        scene_text = _read_text(scene_path)
        trace_text = _read_text(trace_path) if trace_path is not None else ""
    except OSError as exc:
        print(f"ezwin: cannot read input: {exc}", file=err)
        return EXIT_IO

    try:
        commands = dsl.parse_scene(scene_text, source=str(scene_path))
        trace = dsl.parse_trace(trace_text, source=str(trace_path)) if trace_path is not None else []
    except ParseError as exc:
        print(f"ezwin: parse error: {exc}", file=err)
        return EXIT_ERROR

    # bitmaps load before anything renders so a bad file leaves no partial output
    base = scene_path.parent
    images = {}
    for cmd in commands:
        if isinstance(cmd, dsl.BitmapCmd):
            try:
                images[cmd.line] = load_image(base / cmd.path)
            except (ImageNotFound, MalformedImage, OSError) as exc:
                print(f"ezwin: {scene_path}:{cmd.line}: cannot load bitmap: {exc}", file=err)
                return EXIT_IO

    try:
        config.out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        print(f"ezwin: cannot create output directory: {exc}", file=err)
        return EXIT_IO

    scene = Scene(config.scale, screen_px=config.screen_px)
    rt = Runtime(scene)
    runner = SceneRunner(rt, commands, images, config)
    if config.compose_final:
        rt.set_end_callback(lambda: write_ppm(scene.compose(), config.out_dir / "final.ppm"))
    code = rt.run(runner, _trace_source(trace))

    log_path = config.log_path or config.out_dir / "dispatch.log"
    names = runner.names
    try:
        with open(log_path, "w", encoding="utf-8", newline="\n") as f:
            for entry in rt.dispatch_log:
                f.write(format_dispatch(entry, names) + "\n")
    except OSError as exc:
        print(f"ezwin: cannot write dispatch log: {exc}", file=err)
        return EXIT_IO

    if rt.error is not None:
        where = f"{scene_path}:{rt.error.line}" if isinstance(rt.error, SceneError) else str(scene_path)
        cause = rt.error.cause if isinstance(rt.error, SceneError) else rt.error
        print(f"ezwin: {where}: {cause}", file=err)
        return EXIT_IO if isinstance(cause, OSError) else EXIT_ERROR
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig(scale=args.scale, screen_px=args.screen, out_dir=args.out_dir,
                       compose_final=args.compose_final, log_path=args.log_path)
    return run(args.scene, args.trace, config)


if __name__ == "__main__":
    sys.exit(main())
