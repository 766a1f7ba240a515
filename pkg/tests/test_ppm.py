import numpy as np
import pytest

from ezwin import Color, Framebuffer, ImageNotFound, MalformedImage, load_image, read_ppm, write_ppm
from ezwin.ppm import decode_ppm, encode_ppm

FOUR = bytes([255, 0, 0, 0, 255, 0, 0, 0, 255, 10, 20, 30])


@pytest.fixture
def two_by_two(tmp_path):
    p = tmp_path / "four.ppm"
    p.write_bytes(b"P6\n2 2\n255\n" + FOUR)
    return p


def test_load_image_row_major(two_by_two):
    img = load_image(two_by_two)
    assert (img.width_px, img.height_px) == (2, 2)
    assert img.pixels.tobytes() == FOUR
    assert tuple(img.pixels[1, 0]) == (0, 0, 255)


def test_write_exact_bytes(tmp_path):
    p = tmp_path / "red.ppm"
    write_ppm(Framebuffer(1, 1, Color.Red), p)
    data = p.read_bytes()
    assert data == b"P6\n1 1\n255\n\xff\x00\x00"
    assert len(data) == 14


def test_round_trip(tmp_path):
    rng = np.random.default_rng(7)
    fb = Framebuffer.from_array(rng.integers(0, 256, (5, 7, 3), dtype=np.uint8))
    write_ppm(fb, tmp_path / "x.ppm")
    assert read_ppm(tmp_path / "x.ppm") == fb


def test_read_ppm_matches_load_image(two_by_two):
    assert np.array_equal(read_ppm(two_by_two).pixels, load_image(two_by_two).pixels)


def test_comments_and_spacing_tolerated():
    w, h, rgb = decode_ppm(b"P6 # made by hand\n# another\n2   2\n255\n" + FOUR)
    assert (w, h, rgb) == (2, 2, FOUR)


@pytest.mark.parametrize("data", [
    b"P5\n2 2\n255\n" + FOUR,
    b"P6\n2 2\n65535\n" + FOUR,
    b"P6\n2 2\n255\n" + FOUR[:-1],
    b"P6\n2 2\n",
    b"P6\n2 x\n255\n" + FOUR,
    b"",
])
def test_malformed(tmp_path, data):
    p = tmp_path / "bad.ppm"
    p.write_bytes(data)
    with pytest.raises(MalformedImage):
        load_image(p)


def test_missing_file(tmp_path):
    with pytest.raises(ImageNotFound):
        load_image(tmp_path / "nope.ppm")
    with pytest.raises(FileNotFoundError):
        read_ppm(tmp_path / "nope.ppm")


def test_zero_size_framebuffer_round_trips(tmp_path):
    fb = Framebuffer(0, 0)
    assert encode_ppm(fb) == b"P6\n0 0\n255\n"
    write_ppm(fb, tmp_path / "z.ppm")
    assert read_ppm(tmp_path / "z.ppm") == fb
    with pytest.raises(MalformedImage):
        load_image(tmp_path / "z.ppm")
