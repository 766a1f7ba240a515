"""Line-oriented scene scripts and event traces.

Scene commands (one per line, ``#`` starts a comment)::

    window   NAME "TITLE" X Y W H
    rect     NAME WINDOW CX CY W H COLOR
    ellipse  NAME WINDOW CX CY W H COLOR
    triangle NAME WINDOW CX CY SIDE COLOR
    bitmap   NAME WINDOW PATH X Y
    draw     NAME
    erase    NAME
    setpos   NAME X Y
    setcolor NAME COLOR
    snapshot PATH [WINDOW | screen]
    close    WINDOW

Trace commands::

    click X Y
    advance MS
    quit

All coordinates are centimetres. Names are resolved while parsing, so an
undefined or duplicated name is reported with its line number before
anything runs.
"""
from __future__ import annotations

import math
import shlex
from dataclasses import dataclass

from .color import Color
from .errors import DuplicateName, ParseError, UnknownName
from .geometry import Coord2D, Extent2D

SCREEN_TARGET = "screen"


@dataclass(frozen=True)
class WindowCmd:
    line: int
    name: str
    title: str
    pos: Coord2D
    size: Extent2D


@dataclass(frozen=True)
class ShapeCmd:
    line: int
    kind: str  # "rect", "ellipse" or "triangle"
    name: str
    window: str
    center: Coord2D
    extent: Extent2D  # triangles: width is the side, height unused
    color: Color


@dataclass(frozen=True)
class BitmapCmd:
    line: int
    name: str
    window: str
    path: str
    topleft: Coord2D


@dataclass(frozen=True)
class DrawCmd:
    line: int
    name: str


@dataclass(frozen=True)
class EraseCmd:
    line: int
    name: str


@dataclass(frozen=True)
class SetPosCmd:
    line: int
    name: str
    pos: Coord2D


@dataclass(frozen=True)
class SetColorCmd:
    line: int
    name: str
    color: Color


@dataclass(frozen=True)
class SnapshotCmd:
    line: int
    path: str
    target: str | None = None  # window name, "screen", or None for the topmost window


@dataclass(frozen=True)
class CloseCmd:
    line: int
    window: str


@dataclass(frozen=True)
class ClickCmd:
    line: int
    pos: Coord2D


@dataclass(frozen=True)
class AdvanceCmd:
    line: int
    ms: int


@dataclass(frozen=True)
class QuitCmd:
    line: int


def _lines(text: str, source: str | None):
    # split on \n only: splitlines() would also break on \f, \x1c, ... and skew line numbers
    for lineno, raw in enumerate(text.split("\n"), start=1):
        raw = raw.rstrip("\r")
        try:
            tokens = shlex.split(raw, comments=True)
        except ValueError as exc:
            raise ParseError(str(exc).lower(), lineno, raw.strip(), source) from None
        if tokens:
            yield lineno, tokens


def _real(tok: str, line: int) -> float:
    try:
        v = float(tok)
    except ValueError:
        raise ParseError("expected a number", line, tok) from None
    if not math.isfinite(v):
        raise ParseError("number must be finite", line, tok)
    return v


def _nonneg(tok: str, line: int, what: str = "size") -> float:
    v = _real(tok, line)
    if v < 0:
        raise ParseError(f"{what} must not be negative", line, tok)
    return v


def _positive(tok: str, line: int) -> float:
    v = _real(tok, line)
    if v <= 0:
        raise ParseError("window size must be positive", line, tok)
    return v


def _color(tok: str, line: int) -> Color:
    try:
        return Color.parse(tok)
    except ValueError:
        raise ParseError("unknown colour", line, tok) from None


def _arity(tokens, n, line, usage):
    if len(tokens) != n:
        bad = tokens[n] if len(tokens) > n else tokens[0]
        raise ParseError(f"expected: {usage}", line, bad)


_SCENE_USAGE = {
    "window": (7, 'window NAME "TITLE" X Y W H'),
    "rect": (8, "rect NAME WINDOW CX CY W H COLOR"),
    "ellipse": (8, "ellipse NAME WINDOW CX CY W H COLOR"),
    "triangle": (7, "triangle NAME WINDOW CX CY SIDE COLOR"),
    "bitmap": (6, "bitmap NAME WINDOW PATH X Y"),
    "draw": (2, "draw NAME"),
    "erase": (2, "erase NAME"),
    "setpos": (4, "setpos NAME X Y"),
    "setcolor": (3, "setcolor NAME COLOR"),
    "close": (2, "close WINDOW"),
}


def parse_scene(text: str, source: str | None = None) -> list:
    """Parse a scene script into command objects.

    Raises :class:`ParseError` (or its subclasses :class:`UnknownName` and
    :class:`DuplicateName`) for the first bad line.
    """
    kinds: dict[str, str] = {}  # name -> "window" | "shape" | "bitmap"
    commands = []

    def declare(name, kind, line):
        if name in kinds:
            raise DuplicateName("name already defined", line, name, source)
        if name == SCREEN_TARGET:
            raise ParseError("reserved name", line, name, source)
        kinds[name] = kind

    def need(name, allowed, line):
        kind = kinds.get(name)
        if kind is None:
            raise UnknownName("undefined name", line, name, source)
        if kind not in allowed:
            raise ParseError(f"{name!r} is a {kind}, expected {' or '.join(allowed)}", line, name, source)

    for line, t in _lines(text, source):
        op = t[0].lower()
        try:
            if op == "snapshot":
                if len(t) not in (2, 3):
                    raise ParseError("expected: snapshot PATH [WINDOW | screen]", line, t[-1])
                target = t[2] if len(t) == 3 else None
                if target is not None and target != SCREEN_TARGET:
                    need(target, ("window",), line)
                commands.append(SnapshotCmd(line, t[1], target))
                continue
            if op not in _SCENE_USAGE:
                raise ParseError("unknown command", line, t[0])
            n, usage = _SCENE_USAGE[op]
            _arity(t, n, line, usage)
            if op == "window":
                cmd = WindowCmd(line, t[1], t[2], Coord2D(_nonneg(t[3], line, "window position"),
                                                      _nonneg(t[4], line, "window position")),
                                Extent2D(_positive(t[5], line), _positive(t[6], line)))
                declare(t[1], "window", line)
            elif op in ("rect", "ellipse"):
                need(t[2], ("window",), line)
                cmd = ShapeCmd(line, op, t[1], t[2], Coord2D(_real(t[3], line), _real(t[4], line)),
                               Extent2D(_nonneg(t[5], line), _nonneg(t[6], line)), _color(t[7], line))
                declare(t[1], "shape", line)
            elif op == "triangle":
                need(t[2], ("window",), line)
                cmd = ShapeCmd(line, op, t[1], t[2], Coord2D(_real(t[3], line), _real(t[4], line)),
                               Extent2D(_nonneg(t[5], line), 0.0), _color(t[6], line))
                declare(t[1], "shape", line)
            elif op == "bitmap":
                need(t[2], ("window",), line)
                cmd = BitmapCmd(line, t[1], t[2], t[3], Coord2D(_real(t[4], line), _real(t[5], line)))
                declare(t[1], "bitmap", line)
            elif op == "draw":
                need(t[1], ("shape", "bitmap"), line)
                cmd = DrawCmd(line, t[1])
            elif op == "erase":
                need(t[1], ("shape", "bitmap"), line)
                cmd = EraseCmd(line, t[1])
            elif op == "setpos":
                need(t[1], ("shape", "bitmap"), line)
                cmd = SetPosCmd(line, t[1], Coord2D(_real(t[2], line), _real(t[3], line)))
            elif op == "setcolor":
                need(t[1], ("shape",), line)
                cmd = SetColorCmd(line, t[1], _color(t[2], line))
            else:
                need(t[1], ("window",), line)
                cmd = CloseCmd(line, t[1])
        except ParseError as exc:
            exc.source = exc.source or source
            raise
        commands.append(cmd)
    return commands


def parse_trace(text: str, source: str | None = None) -> list:
    """Parse an event trace: ``click X Y``, ``advance MS`` and ``quit`` lines."""
    commands = []
    for line, t in _lines(text, source):
        op = t[0].lower()
        try:
            if op == "click":
                _arity(t, 3, line, "click X Y")
                commands.append(ClickCmd(line, Coord2D(_real(t[1], line), _real(t[2], line))))
            elif op == "advance":
                _arity(t, 2, line, "advance MS")
                try:
                    ms = int(t[1])
                except ValueError:
                    raise ParseError("expected an integer number of milliseconds", line, t[1]) from None
                if ms < 0:
                    raise ParseError("advance must not be negative", line, t[1])
                commands.append(AdvanceCmd(line, ms))
            elif op == "quit":
                _arity(t, 1, line, "quit")
                commands.append(QuitCmd(line))
            else:
                raise ParseError("unknown command", line, t[0])
        except ParseError as exc:
            exc.source = exc.source or source
            raise
    return commands
