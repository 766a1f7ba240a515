import shlex

import pytest
from hypothesis import given, strategies as st

from ezwin import Color, Coord2D, Extent2D, ParseError
from ezwin.dsl import (AdvanceCmd, ClickCmd, DrawCmd, QuitCmd, ShapeCmd, SnapshotCmd, WindowCmd,
                       parse_scene, parse_trace)
from ezwin.errors import DuplicateName, UnknownName


def test_window_command():
    [cmd] = parse_scene('window w1 "Demo" 1 1 10 8')
    assert cmd == WindowCmd(1, "w1", "Demo", Coord2D(1, 1), Extent2D(10, 8))


def test_rect_and_draw():
    cmds = parse_scene('window w1 "Demo" 1 1 10 8\nrect r1 w1 3 4 2 1 red\ndraw r1\n')
    assert cmds[1] == ShapeCmd(2, "rect", "r1", "w1", Coord2D(3, 4), Extent2D(2, 1), Color.Red)
    assert cmds[2] == DrawCmd(3, "r1")


def test_comments_blank_lines_and_case():
    text = '# header\n\nwindow w "multi word title" 0 0 5 5  # trailing\nellipse e w 1 1 2 2 MaGeNtA\n'
    cmds = parse_scene(text)
    assert cmds[0].title == "multi word title"
    assert cmds[1].color is Color.Magenta and cmds[1].line == 4


def test_triangle_and_snapshot_forms():
    cmds = parse_scene('window w "t" 0 0 5 5\ntriangle t w 2 2 1.5 blue\n'
                       'snapshot a.ppm\nsnapshot b.ppm w\nsnapshot c.ppm screen\n')
    assert cmds[1].extent == Extent2D(1.5, 0)
    assert [c.target for c in cmds[2:]] == [None, "w", "screen"]
    assert cmds[2] == SnapshotCmd(3, "a.ppm", None)


def test_undefined_name_reports_line():
    with pytest.raises(UnknownName) as ei:
        parse_scene('window w1 "t" 0 0 5 5\n\ndraw rX\n')
    assert ei.value.line == 3 and ei.value.token == "rX"


def test_forward_reference_is_an_error():
    with pytest.raises(UnknownName):
        parse_scene('rect r w 1 1 1 1 red\nwindow w "t" 0 0 5 5\n')


def test_duplicate_name():
    with pytest.raises(DuplicateName) as ei:
        parse_scene('window w "t" 0 0 5 5\nrect w w 1 1 1 1 red\n')
    assert ei.value.line == 2


@pytest.mark.parametrize("line, token", [
    ('window w "t" 0 0 0 5', "0"),
    ('window w "t" -1 0 5 5', "-1"),
    ('window w "t" 0 0 5', "window"),
    ('window w "t" 0 0 5 5 9', "9"),
    ('window w "t" 0 nan 5 5', "nan"),
    ('window w "t" 0 zz 5 5', "zz"),
    ('frobnicate x', "frobnicate"),
    ('window w "unterminated 0 0 5 5', None),
])
def test_parse_errors(line, token):
    with pytest.raises(ParseError) as ei:
        parse_scene("# ok\n" + line, source="s.scene")
    assert ei.value.line == 2
    if token is not None:
        assert ei.value.token == token
    assert str(ei.value).startswith("s.scene:2:")


def test_kind_mismatches():
    base = 'window w "t" 0 0 5 5\nrect r w 1 1 1 1 red\n'
    for bad in ("draw w", "close r", "setcolor w red", "rect q r 1 1 1 1 red", "snapshot x.ppm r"):
        with pytest.raises(ParseError) as ei:
            parse_scene(base + bad)
        assert ei.value.line == 3
    with pytest.raises(ParseError):
        parse_scene(base + "rect z w 1 1 1 1 mauve")
    with pytest.raises(ParseError):
        parse_scene(base + "rect z w 1 1 -1 1 red")
    with pytest.raises(ParseError):
        parse_scene('window screen "t" 0 0 5 5')


def test_trace_commands():
    assert parse_trace("click 4 5\nadvance 100\nquit\n") == [
        ClickCmd(1, Coord2D(4, 5)), AdvanceCmd(2, 100), QuitCmd(3)]


def test_trace_rejects_negative_advance():
    with pytest.raises(ParseError) as ei:
        parse_trace("click 1 1\nadvance -5")
    assert ei.value.line == 2


@pytest.mark.parametrize("text", ["advance 1.5", "click 1", "quit now", "hover 1 2", "click x 1"])
def test_trace_errors(text):
    with pytest.raises(ParseError):
        parse_trace(text)


def test_empty_trace():
    assert parse_trace("") == []
    assert parse_trace("# nothing\n\n") == []


junk = st.text(alphabet=st.characters(blacklist_categories=("Cs",), blacklist_characters="\r\n"), max_size=30)


@given(st.lists(junk, max_size=8))
def test_parser_totality(lines):
    # every line is either accepted or rejected with its own line number
    text = "\n".join(lines)
    for parse in (parse_scene, parse_trace):
        try:
            cmds = parse(text)
        except ParseError as exc:
            assert 1 <= exc.line <= len(lines)
            bad = lines[exc.line - 1]
            try:
                assert shlex.split(bad, comments=True)
            except ValueError:
                pass  # unbalanced quotes
        else:
            meaningful = [i + 1 for i, ln in enumerate(lines) if shlex.split(ln, comments=True)]
            assert [c.line for c in cmds] == meaningful
