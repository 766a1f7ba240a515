"""Per-pixel fill kernels for ellipses and triangles.

Two interchangeable implementations live here: numba-compiled loops and a
vectorised numpy path. ``EZWIN_DISABLE_NUMBA=1`` (or numba missing) selects
numpy. Both must produce bit-identical output; the test suite checks this.

Kernels write ``rgb`` into ``pixels`` (shape ``(h, w, 3)``, uint8) and clip
to its bounds.
"""
from __future__ import annotations

import os

import numpy as np

# w*h above this would overflow int64 in the exact ellipse test
# (dx^2 h^2 + dy^2 w^2 < 2 w^2 h^2).
ELLIPSE_EXACT_LIMIT = 2_000_000_000


def _env_disabled() -> bool:
    return os.environ.get("EZWIN_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes", "on")


try:
    import numba
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None


# -- numpy path --------------------------------------------------------------

def _clip_span(lo, hi, limit):
    return max(lo, 0), min(hi, limit)


def fill_ellipse_np(pixels, bx, by, bw, bh, rgb):
    if bw <= 0 or bh <= 0:
        return
    H, W = pixels.shape[0], pixels.shape[1]
    i0, i1 = _clip_span(bx, bx + bw, W)
    j0, j1 = _clip_span(by, by + bh, H)
    if i0 >= i1 or j0 >= j1:
        return
    # doubled offsets from the box centre: 2*(i + 0.5) - (2*bx + bw)
    dx = 2 * np.arange(i0, i1, dtype=np.int64) + 1 - (2 * bx + bw)
    dy = 2 * np.arange(j0, j1, dtype=np.int64) + 1 - (2 * by + bh)
    if bw * bh <= ELLIPSE_EXACT_LIMIT:
        w2 = np.int64(bw) * bw
        h2 = np.int64(bh) * bh
        mask = (dy * dy * w2)[:, None] + (dx * dx * h2)[None, :] <= w2 * h2
    else:
        u = dx.astype(np.float64) / bw
        v = dy.astype(np.float64) / bh
        mask = (v * v)[:, None] + (u * u)[None, :] <= 1.0
    region = pixels[j0:j1, i0:i1]
    region[mask] = rgb


def _edge(ax, ay, bx, by, px, py):
    return (bx - ax) * (py - ay) - (by - ay) * (px - ax)


def fill_triangle_np(pixels, x0, y0, x1, y1, x2, y2, rgb):
    area = _edge(x0, y0, x1, y1, x2, y2)
    if area == 0.0:
        return
    H, W = pixels.shape[0], pixels.shape[1]
    i0 = max(int(np.floor(min(x0, x1, x2))) - 1, 0)
    i1 = min(int(np.ceil(max(x0, x1, x2))) + 1, W)
    j0 = max(int(np.floor(min(y0, y1, y2))) - 1, 0)
    j1 = min(int(np.ceil(max(y0, y1, y2))) + 1, H)
    if i0 >= i1 or j0 >= j1:
        return
    px = (np.arange(i0, i1, dtype=np.float64) + 0.5)[None, :]
    py = (np.arange(j0, j1, dtype=np.float64) + 0.5)[:, None]
    e0 = _edge(x1, y1, x2, y2, px, py)
    e1 = _edge(x2, y2, x0, y0, px, py)
    e2 = _edge(x0, y0, x1, y1, px, py)
    if area > 0:
        mask = (e0 >= 0) & (e1 >= 0) & (e2 >= 0)
    else:
        mask = (e0 <= 0) & (e1 <= 0) & (e2 <= 0)
    region = pixels[j0:j1, i0:i1]
    region[mask] = rgb


# -- numba path ---------------------------------------------------------------

def _fill_ellipse_loop(pixels, bx, by, bw, bh, r, g, b):
    if bw <= 0 or bh <= 0:
        return
    H = pixels.shape[0]
    W = pixels.shape[1]
    i0 = max(bx, 0)
    i1 = min(bx + bw, W)
    j0 = max(by, 0)
    j1 = min(by + bh, H)
    exact = bw * bh <= 2_000_000_000
    w2 = np.int64(bw) * bw
    h2 = np.int64(bh) * bh
    lim = w2 * h2
    cx2 = 2 * bx + bw
    cy2 = 2 * by + bh
    for j in range(j0, j1):
        dy = np.int64(2 * j + 1 - cy2)
        for i in range(i0, i1):
            dx = np.int64(2 * i + 1 - cx2)
            if exact:
                inside = dy * dy * w2 + dx * dx * h2 <= lim
            else:
                u = dx / bw
                v = dy / bh
                inside = v * v + u * u <= 1.0
            if inside:
                pixels[j, i, 0] = r
                pixels[j, i, 1] = g
                pixels[j, i, 2] = b


def _fill_triangle_loop(pixels, x0, y0, x1, y1, x2, y2, r, g, b):
    area = (x1 - x0) * (y2 - y0) - (y1 - y0) * (x2 - x0)
    if area == 0.0:
        return
    H = pixels.shape[0]
    W = pixels.shape[1]
    i0 = max(int(np.floor(min(x0, x1, x2))) - 1, 0)
    i1 = min(int(np.ceil(max(x0, x1, x2))) + 1, W)
    j0 = max(int(np.floor(min(y0, y1, y2))) - 1, 0)
    j1 = min(int(np.ceil(max(y0, y1, y2))) + 1, H)
    positive = area > 0
    for j in range(j0, j1):
        py = j + 0.5
        for i in range(i0, i1):
            px = i + 0.5
            e0 = (x2 - x1) * (py - y1) - (y2 - y1) * (px - x1)
            e1 = (x0 - x2) * (py - y2) - (y0 - y2) * (px - x2)
            e2 = (x1 - x0) * (py - y0) - (y1 - y0) * (px - x0)
            if positive:
                inside = e0 >= 0 and e1 >= 0 and e2 >= 0
            else:
                inside = e0 <= 0 and e1 <= 0 and e2 <= 0
            if inside:
                pixels[j, i, 0] = r
                pixels[j, i, 1] = g
                pixels[j, i, 2] = b


if numba is not None:
    _fill_ellipse_jit = numba.njit(cache=True)(_fill_ellipse_loop)
    _fill_triangle_jit = numba.njit(cache=True)(_fill_triangle_loop)
else:  # pragma: no cover
    _fill_ellipse_jit = _fill_triangle_jit = None

HAVE_NUMBA = numba is not None


def fill_ellipse_jit(pixels, bx, by, bw, bh, rgb):
    r, g, b = rgb
    _fill_ellipse_jit(pixels, int(bx), int(by), int(bw), int(bh), r, g, b)


def fill_triangle_jit(pixels, x0, y0, x1, y1, x2, y2, rgb):
    r, g, b = rgb
    _fill_triangle_jit(pixels, float(x0), float(y0), float(x1), float(y1),
                       float(x2), float(y2), r, g, b)


def use_numba() -> bool:
    return HAVE_NUMBA and not _env_disabled()


if use_numba():
    fill_ellipse, fill_triangle = fill_ellipse_jit, fill_triangle_jit
else:
    fill_ellipse, fill_triangle = fill_ellipse_np, fill_triangle_np

BACKEND_NAME = "numba" if use_numba() else "numpy"
