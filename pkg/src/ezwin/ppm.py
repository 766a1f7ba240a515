"""Binary PPM (P6, maxval 255) reading and writing.

Writers emit exactly ``P6\\n<w> <h>\\n255\\n`` followed by raw RGB. Readers
accept any whitespace between header fields and ``#`` comments.
"""
from __future__ import annotations

import os

import numpy as np

from .errors import ImageNotFound, MalformedImage
from .raster import Framebuffer, Image


def encode_ppm(fb: Framebuffer | Image) -> bytes:
    h, w = fb.pixels.shape[:2]
    return b"P6\n%d %d\n255\n" % (w, h) + fb.pixels.tobytes()


def _header_tokens(data: bytes):
    """Yield (token, end_offset) for the four header fields."""
    pos, n = 0, len(data)
    for _ in range(4):
        while pos < n:
            c = data[pos:pos + 1]
            if c == b"#":
                while pos < n and data[pos:pos + 1] not in (b"\n", b"\r"):
                    pos += 1
            elif c.isspace():
                pos += 1
            else:
                break
        start = pos
        while pos < n and not data[pos:pos + 1].isspace() and data[pos:pos + 1] != b"#":
            pos += 1
        if start == pos:
            raise MalformedImage("truncated PPM header")
        yield data[start:pos], pos


def decode_ppm(data: bytes) -> tuple[int, int, bytes]:
    """Parse a P6 image, returning ``(width, height, rgb_bytes)``."""
    tokens = list(_header_tokens(data))
    magic, width, height, maxval = (t for t, _ in tokens)
    if magic != b"P6":
        raise MalformedImage(f"bad magic {magic!r}, expected b'P6'")
    try:
        w, h, mv = int(width), int(height), int(maxval)
    except ValueError as exc:
        raise MalformedImage(f"non-numeric PPM header field: {exc}") from None
    if mv != 255:
        raise MalformedImage(f"unsupported maxval {mv}, expected 255")
    if w < 0 or h < 0:
        raise MalformedImage("negative dimensions")
    end = tokens[-1][1]
    # exactly one whitespace byte separates maxval from the raster
    if end >= len(data) or not data[end:end + 1].isspace():
        if w * h:
            raise MalformedImage("missing raster data")
    body = data[end + 1:]
    need = w * h * 3
    if len(body) < need:
        raise MalformedImage(f"truncated pixel data: {len(body)} of {need} bytes")
    return w, h, body[:need]


def _read(path) -> bytes:
    try:
        with open(path, "rb") as f:
            return f.read()
    except FileNotFoundError:
        raise ImageNotFound(f"no such image file: {os.fspath(path)}") from None


def read_ppm(path) -> Framebuffer:
    w, h, rgb = decode_ppm(_read(path))
    return Framebuffer.from_array(np.frombuffer(rgb, dtype=np.uint8).reshape(h, w, 3))


def write_ppm(fb: Framebuffer | Image, path) -> None:
    with open(path, "wb") as f:
        f.write(encode_ppm(fb))


def load_image(path) -> Image:
    """Load a P6 file as an :class:`Image`. Zero-sized images are rejected."""
    w, h, rgb = decode_ppm(_read(path))
    if w == 0 or h == 0:
        raise MalformedImage("image dimensions must be positive")
    return Image.from_bytes(w, h, rgb)
